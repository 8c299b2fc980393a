use std::collections::BTreeSet;

use crate::drawing::{CrossingSet, Drawing};
use crate::framework::Concept;
use crate::graph::{EdgeId, VertexId};

use super::{Certificate, Verdict, Witness};

/// Bounded search tree: branch on the lowest-indexed uncovered crossing over
/// its candidate elements. Returns the chosen set, or the crossings branched
/// on when every branch fails; those alone already need more than `k`.
fn branch(cands: &[Vec<usize>], k: usize) -> Result<Vec<usize>, Vec<usize>> {
    fn go(cands: &[Vec<usize>], k: usize, chosen: &mut Vec<usize>, core: &mut BTreeSet<usize>) -> bool {
        let Some(x) = (0..cands.len()).find(|&x| !cands[x].iter().any(|c| chosen.contains(c))) else {
            return true;
        };
        core.insert(x);
        if chosen.len() == k {
            return false;
        }
        for &c in &cands[x] {
            chosen.push(c);
            if go(cands, k, chosen, core) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let mut chosen = Vec::new();
    let mut core = BTreeSet::new();
    if go(cands, k, &mut chosen, &mut core) {
        chosen.sort_unstable();
        Ok(chosen)
    } else {
        Err(core.into_iter().collect())
    }
}

pub fn check_k_apex(d: &Drawing, cs: &CrossingSet, k: usize) -> Verdict {
    let cands: Vec<Vec<usize>> = (0..cs.len()).map(|x| cs.vertex_set(&d.graph, x)).collect();
    match branch(&cands, k) {
        Ok(set) => Verdict::new(Concept::KApex, Some(k), None).with_certificate(Certificate::ApexSet(set)),
        Err(core) => Verdict::new(Concept::KApex, Some(k), Some(Witness::Core { crossings: core })),
    }
}

fn edge_cands(cs: &CrossingSet, x: usize) -> Vec<EdgeId> {
    let c = &cs.crossings[x];
    if c.a == c.b {
        vec![c.a]
    } else {
        vec![c.a, c.b]
    }
}

pub fn check_skewness(_d: &Drawing, cs: &CrossingSet, k: usize) -> Verdict {
    let cands: Vec<Vec<usize>> = (0..cs.len()).map(|x| edge_cands(cs, x)).collect();
    match branch(&cands, k) {
        Ok(set) => Verdict::new(Concept::Skewness, Some(k), None).with_certificate(Certificate::SkewEdges(set)),
        Err(core) => Verdict::new(Concept::Skewness, Some(k), Some(Witness::Core { crossings: core })),
    }
}

/// Smallest hitting set of size at most `max` by plain enumeration of subsets.
fn brute(cands: &[Vec<usize>], max: usize) -> Option<Vec<usize>> {
    fn combos(u: &[usize], from: usize, size: usize, cur: &mut Vec<usize>, cands: &[Vec<usize>]) -> bool {
        if cur.len() == size {
            return cands.iter().all(|c| c.iter().any(|v| cur.contains(v)));
        }
        for i in from..u.len() {
            cur.push(u[i]);
            if combos(u, i + 1, size, cur, cands) {
                return true;
            }
            cur.pop();
        }
        false
    }
    let universe: Vec<usize> = cands.iter().flatten().copied().collect::<BTreeSet<_>>().into_iter().collect();
    (0..=max.min(universe.len())).find_map(|size| {
        let mut cur = Vec::new();
        combos(&universe, 0, size, &mut cur, cands).then_some(cur)
    })
}

/// Minimum apex set of size at most `max` for the given crossings.
pub fn min_apex_brute(d: &Drawing, cs: &CrossingSet, crossings: &[usize], max: usize) -> Option<Vec<VertexId>> {
    let cands: Vec<Vec<usize>> = crossings.iter().map(|&x| cs.vertex_set(&d.graph, x)).collect();
    brute(&cands, max)
}

/// Minimum set of skewness edges of size at most `max` for the given crossings.
pub fn min_skew_brute(cs: &CrossingSet, crossings: &[usize], max: usize) -> Option<Vec<EdgeId>> {
    let cands: Vec<Vec<usize>> = crossings.iter().map(|&x| edge_cands(cs, x)).collect();
    brute(&cands, max)
}
