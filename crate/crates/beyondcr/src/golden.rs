//! The golden fixture set: standard drawings at small parameters plus the
//! hand-made fixtures, as JSON and SVG. Regenerating must be byte-identical.

use crate::drawing::compute_crossings;
use crate::error::Result;
use crate::framework::{construction_for, Concept};
use crate::json::{drawing_value, to_pretty};
use crate::layouts::{appendix_fcf_fixture, draw, k5_fcf_fixture, LayoutVariant};
use crate::svg::{to_svg, SvgStyle};

/// Parameters of the per-concept fixtures. Skewness needs ℓ > k.
pub fn golden_params(concept: Concept) -> (usize, usize) {
    match concept {
        Concept::Skewness => (3, 2),
        _ => (2, 2),
    }
}

/// File name stem of a standard drawing fixture.
pub fn golden_stem(concept: Concept, ell: usize, k: usize, variant: LayoutVariant) -> String {
    format!("{}_{concept}_l{ell}_k{}", variant.name(), concept.effective_k(k))
}

/// Every golden file as (name, contents), sorted by name.
pub fn golden_files() -> Result<Vec<(String, String)>> {
    let mut out = Vec::new();
    for concept in Concept::ALL {
        let (ell, k) = golden_params(concept);
        let fg = construction_for(concept, ell, k)?;
        for variant in LayoutVariant::BOTH {
            let d = draw(&fg, concept, variant)?;
            let cs = compute_crossings(&d)?;
            let stem = golden_stem(concept, ell, k, variant);
            out.push((format!("{stem}.json"), to_pretty(&drawing_value(&d, Some(&fg), Some(variant)))));
            let style = SvgStyle { framework: Some(&fg), crossings: Some(&cs), width: 0 };
            out.push((format!("{stem}.svg"), to_svg(&d, &style)));
        }
    }
    // the IC witness at ℓ = 2 under the short name used in examples
    let fg = construction_for(Concept::Ic, 2, 1)?;
    let d = draw(&fg, Concept::Ic, LayoutVariant::Witness)?;
    out.push(("witness_ic_l2.json".into(), to_pretty(&drawing_value(&d, Some(&fg), Some(LayoutVariant::Witness)))));
    let fig5 = appendix_fcf_fixture().drawing;
    let cs = compute_crossings(&fig5)?;
    out.push(("fig5.json".into(), to_pretty(&drawing_value(&fig5, None, None))));
    out.push(("fig5.svg".into(), to_svg(&fig5, &SvgStyle { crossings: Some(&cs), ..Default::default() })));
    let k5 = k5_fcf_fixture();
    out.push(("k5_fcf.json".into(), to_pretty(&drawing_value(&k5, None, None))));
    out.sort();
    Ok(out)
}
