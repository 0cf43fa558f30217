//! Free faces, elementary collapses, replayable collapse traces, the
//! deterministic staircase schedule for K ⊠ Δ¹ ↘ K ⊠ 2, and a greedy
//! collapse-onto search with bounded backtracking.

use crate::bitset::VertexSet;
use crate::complex::Complex;
use crate::constructions::{box_label, OrderedComplex};
use crate::error::{MacxError, Result};
use serde::Serialize;
use std::collections::HashSet;

pub const DEFAULT_COLLAPSE_BUDGET: usize = 1_000_000;

/// A free face together with the unique facet containing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CollapseStep {
    pub free_face: VertexSet,
    pub coface: VertexSet,
}

/// An ordered, replayable sequence of elementary collapses.
#[derive(Debug, Clone)]
pub struct CollapseTrace {
    pub start: Complex,
    pub end: Complex,
    pub steps: Vec<CollapseStep>,
}

#[derive(Serialize)]
struct TraceStepJson {
    free_face: Vec<String>,
    coface: Vec<String>,
}

impl CollapseTrace {
    /// Re-run every step from the start complex, validating each one, and
    /// check the result equals the recorded end.
    pub fn replay(&self) -> Result<()> {
        let mut current = self.start.clone();
        for step in &self.steps {
            current = elementary_collapse(&current, step)?;
        }
        if current.facets() == self.end.facets() {
            Ok(())
        } else {
            Err(MacxError::InvalidArgument("trace replay does not reach the recorded end".into()))
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let steps: Vec<TraceStepJson> = self
            .steps
            .iter()
            .map(|s| TraceStepJson {
                free_face: self.start.ground().labels_of(&s.free_face),
                coface: self.start.ground().labels_of(&s.coface),
            })
            .collect();
        serde_json::json!({
            "steps": steps.len(),
            "pairs": serde_json::to_value(steps).unwrap(),
        })
    }
}

/// All free faces of K: the non-facets contained in exactly one facet,
/// listed by descending dimension then canonical order.
pub fn free_faces(k: &Complex, cap: usize) -> Result<Vec<CollapseStep>> {
    let mut out = Vec::new();
    for face in k.all_faces(cap)? {
        if face.is_empty() {
            continue;
        }
        let mut containing = k.facets().iter().filter(|f| face.is_subset(f));
        let (first, second) = (containing.next(), containing.next());
        if let (Some(facet), None) = (first, second) {
            if *facet != face {
                out.push(CollapseStep { free_face: face, coface: facet.clone() });
            }
        }
    }
    out.sort_by(|a, b| {
        b.free_face
            .len()
            .cmp(&a.free_face.len())
            .then_with(|| a.free_face.cmp(&b.free_face))
    });
    Ok(out)
}

/// Remove a free face and every face containing it. The step must be valid
/// in the current complex: its face free, its coface the unique facet.
pub fn elementary_collapse(k: &Complex, step: &CollapseStep) -> Result<Complex> {
    if step.free_face.is_empty() || !step.free_face.is_subset(&step.coface) {
        return Err(MacxError::InvalidArgument("malformed collapse step".into()));
    }
    let mut containing = k.facets().iter().filter(|f| step.free_face.is_subset(f));
    match (containing.next(), containing.next()) {
        (Some(facet), None) if *facet == step.coface && step.free_face != step.coface => {}
        _ => {
            return Err(MacxError::InvalidArgument(format!(
                "stale collapse step: {} is not a free face with facet {}",
                k.ground().display(&step.free_face),
                k.ground().display(&step.coface)
            )))
        }
    }
    // faces surviving from the removed facet: maximal ones are coface - v
    // for v in the free face
    let mut gens: Vec<VertexSet> = k
        .facets()
        .iter()
        .filter(|f| **f != step.coface)
        .cloned()
        .collect();
    for v in step.free_face.iter() {
        let mut g = step.coface.clone();
        g.remove(v);
        gens.push(g);
    }
    Ok(Complex::new(k.ground().clone(), gens))
}

/// The Example-5.2.2 schedule for K ⊠ Δ¹ ↘ K ⊠ 2 as label pairs on the
/// product complex: faces of K in descending dimension then canonical
/// order; within a face x_1 < .. < x_s, the pairs
/// ({x_1..x_i}@1 ∪ {x_(i+1)..x_s}@2, same ∪ {x_i}@2) for i = s down to 1.
pub fn staircase_schedule(
    k: &OrderedComplex,
    cap: usize,
) -> Result<Vec<(Vec<String>, Vec<String>)>> {
    let complex = k.complex();
    let rank: std::collections::HashMap<usize, usize> =
        k.order().iter().enumerate().map(|(r, &p)| (p, r)).collect();
    let mut faces: Vec<VertexSet> = complex
        .all_faces(cap)?
        .into_iter()
        .filter(|f| !f.is_empty())
        .collect();
    faces.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    let mut out = Vec::new();
    for face in faces {
        let mut verts = face.to_vec();
        verts.sort_by_key(|p| rank[p]);
        let s = verts.len();
        for i in (1..=s).rev() {
            let mut free: Vec<String> = Vec::with_capacity(s);
            for (t, &p) in verts.iter().enumerate() {
                let level = if t < i { "1" } else { "2" };
                free.push(box_label(complex.ground().label(p), level));
            }
            let mut coface = free.clone();
            coface.push(box_label(complex.ground().label(verts[i - 1]), "2"));
            out.push((free, coface));
        }
    }
    Ok(out)
}

/// Replay a label schedule on a complex, skipping pairs that are absent or
/// degenerate, looping until no further pair applies. Used to drive the
/// staircase schedule through quotients (identified level-2 vertices) and
/// vertex deletions.
pub fn replay_labelled_schedule(
    start: &Complex,
    pairs: &[(Vec<String>, Vec<String>)],
    protected: &HashSet<VertexSet>,
) -> Result<CollapseTrace> {
    let ground = start.ground();
    let to_set = |labels: &[String]| -> Option<VertexSet> {
        let mut s = VertexSet::empty();
        for l in labels {
            s.insert(ground.position(l)?);
        }
        Some(s)
    };
    let mut pending: Vec<(VertexSet, VertexSet)> = pairs
        .iter()
        .filter_map(|(f, c)| {
            let fs = to_set(f)?;
            let cs = to_set(c)?;
            // degenerate images collapse onto existing faces and are skipped
            if fs.len() != f.len() || cs.len() != c.len() || fs == cs {
                return None;
            }
            Some((fs, cs))
        })
        .collect();
    let mut current = start.clone();
    let mut steps = Vec::new();
    loop {
        let mut progressed = false;
        let mut remaining = Vec::with_capacity(pending.len());
        for (f, c) in pending {
            if !current.is_face(&f) {
                continue;
            }
            if protected.contains(&f) {
                continue;
            }
            let step = CollapseStep { free_face: f, coface: c };
            match elementary_collapse(&current, &step) {
                Ok(next) => {
                    current = next;
                    steps.push(step);
                    progressed = true;
                }
                Err(_) => remaining.push((step.free_face, step.coface)),
            }
        }
        if !progressed {
            break;
        }
        pending = remaining;
    }
    Ok(CollapseTrace { start: start.clone(), end: current, steps })
}

/// Greedy collapse of K onto a subcomplex, preferring high-dimensional free
/// faces outside the target, with backtracking bounded by a step budget.
/// Budget exhaustion is inconclusive, not a disproof.
pub fn collapse_onto(
    k: &Complex,
    target: &Complex,
    budget: usize,
    cap: usize,
) -> Result<CollapseTrace> {
    if !k.contains_as_subcomplex(target) {
        return Err(MacxError::InvalidArgument("target is not a subcomplex".into()));
    }
    // target faces in K's ground positions
    let mut protected: HashSet<VertexSet> = HashSet::new();
    let mut target_facets: Vec<VertexSet> = Vec::new();
    for f in target.all_faces(cap)? {
        let mapped: VertexSet = f
            .iter()
            .map(|p| k.ground().position(target.ground().label(p)).unwrap())
            .collect();
        protected.insert(mapped);
    }
    for f in target.facets() {
        target_facets.push(
            f.iter()
                .map(|p| k.ground().position(target.ground().label(p)).unwrap())
                .collect(),
        );
    }
    target_facets.sort();

    let mut budget_left = budget;
    let mut visited: HashSet<Vec<VertexSet>> = HashSet::new();
    let mut steps: Vec<CollapseStep> = Vec::new();
    if dfs(k.clone(), &protected, &target_facets, &mut budget_left, &mut visited, &mut steps, cap)? {
        let mut end = k.clone();
        for s in &steps {
            end = elementary_collapse(&end, s)?;
        }
        return Ok(CollapseTrace { start: k.clone(), end, steps });
    }
    Err(MacxError::BudgetExhausted(budget))
}

fn dfs(
    current: Complex,
    protected: &HashSet<VertexSet>,
    target_facets: &[VertexSet],
    budget_left: &mut usize,
    visited: &mut HashSet<Vec<VertexSet>>,
    steps: &mut Vec<CollapseStep>,
    cap: usize,
) -> Result<bool> {
    let mut facets: Vec<VertexSet> = current.facets().to_vec();
    facets.sort();
    if facets == target_facets {
        return Ok(true);
    }
    if !visited.insert(facets) {
        return Ok(false);
    }
    let candidates: Vec<CollapseStep> = free_faces(&current, cap)?
        .into_iter()
        .filter(|s| !protected.contains(&s.free_face))
        .collect();
    for step in candidates {
        if *budget_left == 0 {
            return Err(MacxError::BudgetExhausted(0));
        }
        *budget_left -= 1;
        let next = elementary_collapse(&current, &step)?;
        steps.push(step);
        if dfs(next, protected, target_facets, budget_left, visited, steps, cap)? {
            return Ok(true);
        }
        steps.pop();
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{box_product, boundary_simplex, simplex};
    use crate::field::RingSpec;
    use crate::homology::{homology, DEFAULT_FACE_CAP};

    #[test]
    fn free_faces_of_edge_and_sphere() {
        let edge = simplex(vec!["1", "2"]).unwrap();
        let ff = free_faces(&edge, 1000).unwrap();
        assert_eq!(ff.len(), 2);
        assert!(ff.iter().all(|s| s.free_face.len() == 1 && s.coface.len() == 2));

        let sphere = boundary_simplex(vec!["1", "2", "3"]).unwrap();
        assert!(free_faces(&sphere, 1000).unwrap().is_empty());
    }

    #[test]
    fn collapse_edge_to_point() {
        let edge = simplex(vec!["1", "2"]).unwrap();
        let step = CollapseStep {
            free_face: VertexSet::singleton(0),
            coface: VertexSet::from_positions([0, 1]),
        };
        let collapsed = elementary_collapse(&edge, &step).unwrap();
        assert_eq!(collapsed.facets().len(), 1);
        assert_eq!(collapsed.facets()[0], VertexSet::singleton(1));
        // the same step is now stale
        assert!(elementary_collapse(&collapsed, &step).is_err());
    }

    #[test]
    fn collapse_preserves_homology() {
        let k = Complex::from_labels(
            vec!["1", "2", "3", "4"],
            vec![vec!["1", "2", "3"], vec!["2", "3", "4"]],
        )
        .unwrap();
        let mut current = k.clone();
        loop {
            let ff = free_faces(&current, 1000).unwrap();
            let Some(step) = ff.first().cloned() else { break };
            let next = elementary_collapse(&current, &step).unwrap();
            let h_before = homology(&current, RingSpec::Z, true, 1000).unwrap();
            let h_after = homology(&next, RingSpec::Z, true, 1000).unwrap();
            for d in -1..=3 {
                assert_eq!(h_before.group(d), h_after.group(d));
            }
            current = next;
        }
        // two triangles glued along an edge collapse to a point
        assert_eq!(current.facets().len(), 1);
        assert_eq!(current.facets()[0].len(), 1);
    }

    #[test]
    fn simplices_collapse_to_a_point() {
        for m in 1..=5 {
            let labels: Vec<String> = (1..=m + 1).map(|i| i.to_string()).collect();
            let k = simplex(labels.clone()).unwrap();
            let pt = Complex::from_labels(vec![labels[m].clone()], vec![vec![labels[m].clone()]]).unwrap();
            let trace = collapse_onto(&k, &pt, DEFAULT_COLLAPSE_BUDGET, DEFAULT_FACE_CAP).unwrap();
            trace.replay().unwrap();
            assert_eq!(trace.end.facets().len(), 1);
        }
    }

    #[test]
    fn staircase_schedule_collapses_box_onto_top() {
        // Δ² ⊠ Δ¹ onto Δ² ⊠ 2, following the printed order
        let k = simplex(vec!["1", "2", "3"]).unwrap();
        let ordered = OrderedComplex::natural(k.clone());
        let delta1 = simplex(vec!["1", "2"]).unwrap();
        let prod = box_product(&ordered, &OrderedComplex::natural(delta1)).unwrap();
        let schedule = staircase_schedule(&ordered, 1000).unwrap();
        let trace = replay_labelled_schedule(&prod, &schedule, &HashSet::new()).unwrap();
        trace.replay().unwrap();
        // end = K ⊠ 2: the image of K under x ↦ (x,2)
        let top = crate::constructions::box_fiber(&k, "2").unwrap();
        assert!(trace.end.contains_as_subcomplex(&top));
        assert_eq!(trace.end.facets().len(), top.facets().len());
        // the whole interval got removed two faces at a time
        assert_eq!(trace.steps.len() * 2 + top_face_count(&top), face_count(&prod));
    }

    fn face_count(k: &Complex) -> usize {
        k.all_faces(100000).unwrap().len() - 1
    }

    fn top_face_count(k: &Complex) -> usize {
        face_count(k)
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let k = simplex(vec!["1", "2", "3", "4"]).unwrap();
        let pt = Complex::from_labels(vec!["4"], vec![vec!["4"]]).unwrap();
        match collapse_onto(&k, &pt, 1, 1000) {
            Err(MacxError::BudgetExhausted(_)) => {}
            other => panic!("expected budget exhaustion, got {other:?}"),
        }
    }
}
