//! Ratio-side arithmetic: the crossing lemma, upper bounds on the crossing
//! ratio per concept, and the report that sets the counting bound of each
//! construction against the crossings of its upper drawing.

use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::drawing::compute_crossings;
use crate::error::Result;
use crate::framework::{check_params, edge_count, vertex_count, Concept};
use crate::geom::Q;
use crate::kuratowski::counting_lower_bound;
use crate::layouts::{crossing_count_formula, standard_drawing, LayoutVariant};

fn qi(n: u128) -> Q {
    Q::from_integer((n as i128).into())
}

fn qr(n: u128, d: u128) -> Q {
    qi(n) / qi(d)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaBound {
    #[serde(serialize_with = "crate::geom::ser_q")]
    pub value: Q,
    /// `m <= 4n`: the lemma does not apply and `value` is 0.
    pub sparse: bool,
}

/// m³/(64 n²) for m > 4n.
pub fn crossing_lemma_bound(n: u64, m: u64) -> LemmaBound {
    if n == 0 || m <= 4 * n {
        return LemmaBound { value: Q::zero(), sparse: true };
    }
    let (n, m) = (n as u128, m as u128);
    LemmaBound { value: qr(m * m * m, 64 * n * n), sparse: false }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RatioUpper {
    #[serde(serialize_with = "crate::geom::ser_q")]
    pub value: Q,
    pub tag: Option<&'static str>,
    pub trace: Vec<String>,
}

/// Upper bound on the crossing ratio at `n` vertices. `m` only matters
/// through `m <= 4n` (sparse) versus the dense regime, where the crossing
/// lemma with constant 1/64 caps the ratio; the value is the larger of both.
pub fn ratio_upper(concept: Concept, n: u64, m: u64, k: u64) -> RatioUpper {
    let (n, k) = (n as u128, (concept.effective_k(k as usize) as u128).max(1));
    let mut trace = vec![format!(
        "n = {n}, m = {m} ({}); crossing lemma constant 1/64",
        if m <= 4 * n as u64 { "sparse" } else { "dense" }
    )];
    // dense regime, worst case m = 4n: U(m)·64n²/m³
    let dense_mk = || qi(4 * k);
    let dense_m2 = || qi(8 * n);
    let mut tag = None;
    let (sparse, dense) = match concept {
        Concept::KPlanar => {
            trace.push("sparse: R_s <= mk/(k+1) with m <= 4n".into());
            trace.push("dense: cr <= mk, so mk·64n²/m³ < 4k".into());
            (qr(4 * n * k, k + 1), Some(dense_mk()))
        }
        Concept::KVertexPlanar => {
            trace.push("sparse: R_s <= nk/(k+1)".into());
            trace.push("dense: cr <= nk, so nk·64n²/m³ < k".into());
            (qr(n * k, k + 1), Some(qi(k)))
        }
        Concept::Ic => {
            trace.push("IC drawings have at most n/4 crossings, a non-IC drawing at least 2".into());
            (qr(n, 8), None)
        }
        Concept::Nic => {
            trace.push("NIC drawings have at most m/2 crossings, a non-NIC drawing at least 2".into());
            trace.push("NIC-planar graphs have at most 18n/5 edges".into());
            (qr(9 * n, 10), None)
        }
        Concept::Nnic => {
            trace.push(
                "sparse: simple drawings have at most m²/2 <= 8n² crossings, a non-NNIC drawing at least 2".into(),
            );
            trace.push("dense: m²/2·64n²/m³ < 8n".into());
            (qi(4 * n * n), Some(dense_m2()))
        }
        Concept::KFanCrossingFree => {
            trace.push("sparse: at most m²/2 <= 8n² crossings, a non-k-fcf drawing at least k".into());
            trace.push("dense: m²/2·64n²/m³ < 8n".into());
            (qr(8 * n * n, k), Some(dense_m2()))
        }
        Concept::AdjacencyCrossing | Concept::FanCrossing | Concept::WeakFanPlanar | Concept::StrongFanPlanar => {
            tag = match concept {
                Concept::AdjacencyCrossing | Concept::FanCrossing => Some("simple-drawings-only"),
                _ => None,
            };
            trace.push("sparse: at most m²/2 <= 8n² crossings, a violating drawing at least 2".into());
            trace.push("dense: m²/2·64n²/m³ < 8n".into());
            if tag.is_some() {
                trace.push("the m²/2 cap assumes a simple crossing-minimal drawing".into());
            }
            (qi(4 * n * n), Some(dense_m2()))
        }
        Concept::KEdgeCrossing => {
            trace.push("sparse: fewer than k²/2 crossings, a non-k-ecr drawing at least (k+1)/2".into());
            trace.push("dense: k²/2·64n²/m³ < k²/(2n)".into());
            (qr(k * k, k + 1), Some(qr(k * k, 2 * n.max(1))))
        }
        Concept::KGapPlanar => {
            trace.push("sparse: at most mk <= 4nk crossings, a non-k-gap drawing more than 2k".into());
            trace.push("dense: mk·64n²/m³ < 4k".into());
            (qr(2 * n, k), Some(dense_mk()))
        }
        Concept::KApex => {
            trace.push(
                "simple k-apex drawings exist; at most m²/2 <= 8n² crossings, a non-k-apex drawing at least k+1".into(),
            );
            trace.push("dense: m²/2·64n²/m³ < 8n".into());
            (qr(8 * n * n, k + 1), Some(dense_m2()))
        }
        Concept::Skewness => {
            trace.push(
                "k skewness edges cross at most mk <= 4nk times, a non-skewness-k drawing has at least k+1 crossings"
                    .into(),
            );
            trace.push("dense: mk·64n²/m³ < 4k".into());
            (qr(4 * n * k, k + 1), Some(dense_mk()))
        }
    };
    let value = match dense {
        Some(d) if d > sparse => d,
        _ => sparse,
    };
    trace.push(format!("bound {}", crate::geom::q_to_string(&value)));
    RatioUpper { value, tag, trace }
}

/// Whether the construction's upper drawing already lies in the class with
/// parameter k+1, so the ratio is attained between k and k+1.
pub fn sharpness_flag(concept: Concept) -> bool {
    concept.has_k() && concept != Concept::KGapPlanar
}

/// Growth class of the crossing ratio, as tabulated.
pub fn theta_class(concept: Concept) -> &'static str {
    match concept {
        Concept::KPlanar | Concept::KVertexPlanar | Concept::Ic | Concept::Nic | Concept::Skewness => "Θ(n)",
        Concept::Nnic
        | Concept::AdjacencyCrossing
        | Concept::FanCrossing
        | Concept::WeakFanPlanar
        | Concept::StrongFanPlanar => "Θ(n²)",
        Concept::KFanCrossingFree | Concept::KApex => "Θ(n²/k)",
        Concept::KEdgeCrossing => "Θ(k)",
        Concept::KGapPlanar => "Θ(n/k)",
    }
}

/// Exponent of n in [`theta_class`] at fixed k.
pub fn theta_exponent(concept: Concept) -> f64 {
    match theta_class(concept) {
        "Θ(n)" | "Θ(n/k)" => 1.0,
        "Θ(k)" => 0.0,
        _ => 2.0,
    }
}

/// The same constructions witness the rectilinear ratio, except for the fan
/// variants whose K7 gadgets need bends.
pub fn rectilinear_flag(concept: Concept) -> bool {
    !concept.is_fan_variant()
}

/// Where crossing counts come from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CountSource {
    /// Closed forms only; works at any scale.
    Formula,
    /// Both standard drawings are emitted and their crossings computed.
    Drawings,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RatioReport {
    pub concept: Concept,
    pub ell: usize,
    pub k: usize,
    pub n: u128,
    pub m: u128,
    pub witness_crossings: u128,
    pub upper_drawing_crossings: u128,
    #[serde(serialize_with = "crate::geom::ser_q")]
    pub counting_bound: Q,
    /// counting_bound / upper_drawing_crossings.
    #[serde(serialize_with = "crate::geom::ser_q")]
    pub empirical_ratio: Q,
    pub theta_class: &'static str,
    pub sharp: bool,
    pub rectilinear: bool,
    pub below_threshold: bool,
    pub source: CountSource,
}

pub fn ratio_report(concept: Concept, ell: usize, k: usize, source: CountSource) -> Result<RatioReport> {
    check_params(concept, ell, k)?;
    let kk = concept.effective_k(k);
    let lb = counting_lower_bound(concept, ell, k)?;
    let (witness, upper) = match source {
        CountSource::Formula => (
            crossing_count_formula(concept, LayoutVariant::Witness, ell, k)?,
            crossing_count_formula(concept, LayoutVariant::Upper, ell, k)?,
        ),
        CountSource::Drawings => {
            let count =
                |v| -> Result<u128> { Ok(compute_crossings(&standard_drawing(concept, ell, k, v)?)?.len() as u128) };
            (count(LayoutVariant::Witness)?, count(LayoutVariant::Upper)?)
        }
    };
    Ok(RatioReport {
        concept,
        ell,
        k: kk,
        n: vertex_count(concept, ell as u128, kk as u128),
        m: edge_count(concept, ell as u128, kk as u128),
        witness_crossings: witness,
        upper_drawing_crossings: upper,
        empirical_ratio: &lb.value / qi(upper.max(1)),
        counting_bound: lb.value,
        theta_class: theta_class(concept),
        sharp: sharpness_flag(concept),
        rectilinear: rectilinear_flag(concept),
        below_threshold: lb.below_threshold,
        source,
    })
}

/// One report per grid point, in grid order.
pub fn table1_report(grid: &[(Concept, usize, usize)], source: CountSource) -> Result<Vec<RatioReport>> {
    grid.par_iter().map(|&(c, l, k)| ratio_report(c, l, k, source)).collect()
}

/// Every concept at its threshold ℓ with k = 2.
pub fn threshold_grid() -> Vec<(Concept, usize, usize)> {
    Concept::ALL.iter().map(|&c| (c, c.ell_threshold(2).max(2), 2)).collect()
}

/// Six doublings of ℓ starting well above the threshold, where the constants
/// of the counting bound and the fixed part of n have settled.
pub fn growth_ells(concept: Concept, k: usize) -> Vec<usize> {
    let base = (8 * concept.ell_threshold(k)).max(128);
    (0..6).map(|i| base << i).collect()
}

/// Least-squares slope of log y against log x.
pub fn loglog_slope(points: &[(f64, f64)]) -> f64 {
    let pts: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let len = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / len;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / len;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    sxy / sxx
}

/// Log-log slope of the empirical ratio against n over `ells` at fixed `k`.
pub fn growth_exponent(concept: Concept, k: usize, ells: &[usize]) -> Result<f64> {
    let grid: Vec<_> = ells.iter().map(|&l| (concept, l, k)).collect();
    let reports = table1_report(&grid, CountSource::Formula)?;
    let pts: Vec<(f64, f64)> =
        reports.iter().map(|r| (r.n as f64, r.empirical_ratio.to_f64().unwrap_or(f64::NAN))).collect();
    Ok(loglog_slope(&pts))
}

/// Plain-text table: class, sharpness and rectilinear flag next to the
/// numbers of each report.
pub fn table1_text(reports: &[RatioReport]) -> String {
    let mut out = format!(
        "{:<6} {:<8} {:<5} {:<5} {:>6} {:>3} {:>10} {:>12} {:>6} {:>14} {:>14}\n",
        "conc", "class", "sharp", "rect", "ell", "k", "n", "witness", "upper", "bound", "ratio"
    );
    for r in reports {
        let yn = |b: bool| if b { "yes" } else { "no" };
        out.push_str(&format!(
            "{:<6} {:<8} {:<5} {:<5} {:>6} {:>3} {:>10} {:>12} {:>6} {:>14} {:>14}\n",
            r.concept.short_name(),
            r.theta_class,
            yn(r.sharp),
            yn(r.rectilinear),
            r.ell,
            r.k,
            r.n,
            r.witness_crossings,
            r.upper_drawing_crossings,
            short_q(&r.counting_bound),
            short_q(&r.empirical_ratio),
        ));
    }
    out
}

fn short_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{:.3}", x.to_f64().unwrap_or(f64::NAN))
    }
}
