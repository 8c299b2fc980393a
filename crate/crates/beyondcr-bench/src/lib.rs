pub use beyondcr;
