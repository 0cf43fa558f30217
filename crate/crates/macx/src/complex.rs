//! Finite simplicial complexes with ghost vertices and the combinatorial
//! operations on them: link, star, restriction, join, union along a face,
//! Alexander dual, and minimal non-faces.
//!
//! A complex is immutable after construction. It is stored by its facet
//! antichain over an ordered ground set; the empty face is always present,
//! and a complex whose only face is the empty one has the facet list `[∅]`.
//! Ground-set elements lying in no facet are ghost vertices.

use crate::bitset::VertexSet;
use crate::error::{MacxError, Result};
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

/// Ordered set of distinct vertex labels. The order is total, fixed at
/// construction, and every orientation and product convention derives from it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroundSet {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

impl GroundSet {
    pub fn new<S: Into<String>, I: IntoIterator<Item = S>>(labels: I) -> Result<Arc<GroundSet>> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(MacxError::DuplicateLabel(l.clone()));
            }
        }
        Ok(Arc::new(GroundSet { labels, index }))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, pos: usize) -> &str {
        &self.labels[pos]
    }

    pub fn position(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn set_from_labels<S: AsRef<str>, I: IntoIterator<Item = S>>(
        &self,
        labels: I,
    ) -> Result<VertexSet> {
        let mut s = VertexSet::empty();
        for l in labels {
            let l = l.as_ref();
            let pos = self
                .position(l)
                .ok_or_else(|| MacxError::UnknownLabel(l.to_string()))?;
            s.insert(pos);
        }
        Ok(s)
    }

    pub fn labels_of(&self, set: &VertexSet) -> Vec<String> {
        set.iter().map(|p| self.labels[p].clone()).collect()
    }

    /// Human-readable `{a,b,c}` form of a face.
    pub fn display(&self, set: &VertexSet) -> String {
        let mut s = String::from("{");
        for (k, p) in set.iter().enumerate() {
            if k > 0 {
                s.push(',');
            }
            s.push_str(&self.labels[p]);
        }
        s.push('}');
        s
    }
}

/// An immutable finite simplicial complex, stored by its facet antichain.
#[derive(Clone)]
pub struct Complex {
    ground: Arc<GroundSet>,
    facets: Vec<VertexSet>,
}

impl PartialEq for Complex {
    fn eq(&self, other: &Self) -> bool {
        self.ground.labels == other.ground.labels && self.facets == other.facets
    }
}
impl Eq for Complex {}

impl fmt::Debug for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Complex[{} vertices; facets:", self.ground.len())?;
        for fc in &self.facets {
            write!(f, " {}", self.ground.display(fc))?;
        }
        write!(f, "]")
    }
}

/// Reduce a face list to its inclusion antichain, sorted canonically.
/// An empty input yields `[∅]`.
fn prune_to_antichain(mut faces: Vec<VertexSet>) -> Vec<VertexSet> {
    faces.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    faces.dedup();
    let mut facets: Vec<VertexSet> = Vec::new();
    for f in faces {
        if !facets.iter().any(|g| f.is_subset(g)) {
            facets.push(f);
        }
    }
    facets.retain(|f| !f.is_empty());
    if facets.is_empty() {
        facets.push(VertexSet::empty());
    }
    facets.sort();
    facets
}

impl Complex {
    /// Build a complex from an arbitrary generating face list. Non-maximal
    /// faces are pruned and the empty face is always included.
    pub fn new(ground: Arc<GroundSet>, faces: Vec<VertexSet>) -> Complex {
        for f in &faces {
            if let Some(p) = f.max() {
                assert!(p < ground.len(), "face position {p} outside ground set");
            }
        }
        Complex { ground, facets: prune_to_antichain(faces) }
    }

    /// [`Complex::new`] from labelled input: the `make_complex` operation.
    pub fn from_labels<S, I, FI, F>(ground: I, faces: FI) -> Result<Complex>
    where
        S: Into<String>,
        I: IntoIterator<Item = S>,
        F: IntoIterator<Item = S>,
        FI: IntoIterator<Item = F>,
    {
        let ground = GroundSet::new(ground)?;
        let faces = faces
            .into_iter()
            .map(|f| ground.set_from_labels(f.into_iter().map(|s| s.into())))
            .collect::<Result<Vec<_>>>()?;
        Ok(Complex::new(ground, faces))
    }

    /// The complex whose only face is the empty one, on the given ground set
    /// (all elements ghost).
    pub fn empty_complex(ground: Arc<GroundSet>) -> Complex {
        Complex { ground, facets: vec![VertexSet::empty()] }
    }

    pub fn ground(&self) -> &Arc<GroundSet> {
        &self.ground
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn facet_count(&self) -> usize {
        if self.is_empty_complex() {
            0
        } else {
            self.facets.len()
        }
    }

    /// True when the only face is ∅.
    pub fn is_empty_complex(&self) -> bool {
        self.facets.len() == 1 && self.facets[0].is_empty()
    }

    /// Dimension of the complex; the empty complex has dimension -1.
    pub fn dim(&self) -> i64 {
        self.facets
            .iter()
            .map(|f| f.len() as i64 - 1)
            .max()
            .unwrap_or(-1)
    }

    pub fn is_face(&self, face: &VertexSet) -> bool {
        self.facets.iter().any(|f| face.is_subset(f))
    }

    /// Vertex set V(K): ground positions lying in some face.
    pub fn vertex_support(&self) -> VertexSet {
        let mut s = VertexSet::empty();
        for f in &self.facets {
            s = s.union(f);
        }
        s
    }

    /// Ground elements in no face.
    pub fn ghost_vertices(&self) -> VertexSet {
        self.vertex_support().complement(self.ground.len())
    }

    /// True when the single facet is the whole ground set.
    pub fn is_full_simplex(&self) -> bool {
        self.facets.len() == 1 && self.facets[0].len() == self.ground.len() && !self.ground.is_empty()
    }

    /// All faces of dimension `d`, canonically sorted. `d = -1` yields `[∅]`.
    pub fn faces_of_dim(&self, d: i64) -> Vec<VertexSet> {
        assert!(d >= -1, "dimension must be at least -1");
        if d == -1 {
            return vec![VertexSet::empty()];
        }
        let k = (d + 1) as usize;
        let mut out: BTreeSet<VertexSet> = BTreeSet::new();
        for f in &self.facets {
            if f.len() < k {
                continue;
            }
            let verts = f.to_vec();
            for comb in combinations(&verts, k) {
                out.insert(VertexSet::from_positions(comb));
            }
        }
        out.into_iter().collect()
    }

    /// Every face including ∅, grouped nowhere: sorted by (dimension, order).
    /// Refuses beyond `cap` faces; the counterexample complex contains a
    /// 51-simplex and must never be expanded.
    pub fn all_faces(&self, cap: usize) -> Result<Vec<VertexSet>> {
        let mut out: BTreeSet<VertexSet> = BTreeSet::new();
        out.insert(VertexSet::empty());
        for f in &self.facets {
            if f.len() >= 63 {
                return Err(MacxError::FaceGuard { found: usize::MAX, cap });
            }
            for s in f.subsets() {
                out.insert(s);
                if out.len() > cap {
                    return Err(MacxError::FaceGuard { found: out.len(), cap });
                }
            }
        }
        let mut v: Vec<VertexSet> = out.into_iter().collect();
        v.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(v)
    }

    /// Face counts by dimension, `f[d]` = number of d-faces (f[0] counts
    /// vertices; the empty face is not counted).
    pub fn f_vector(&self, cap: usize) -> Result<Vec<usize>> {
        let dim = self.dim();
        let mut f = vec![0usize; dim.max(0) as usize + 1];
        for face in self.all_faces(cap)? {
            if !face.is_empty() {
                f[face.len() - 1] += 1;
            }
        }
        Ok(f)
    }

    /// Reduced Euler characteristic: sum of (-1)^dim over all faces incl. ∅.
    pub fn reduced_euler_characteristic(&self, cap: usize) -> Result<i64> {
        let mut chi: i64 = 0;
        for face in self.all_faces(cap)? {
            chi += if face.len() % 2 == 0 { -1 } else { 1 };
        }
        Ok(chi)
    }

    /// link_K(σ): faces τ ⊆ V−σ with τ∪σ ∈ K, on the ground set V−σ.
    pub fn link(&self, face: &VertexSet) -> Result<Complex> {
        if !self.is_face(face) {
            return Err(MacxError::NotAFace(self.ground.display(face)));
        }
        let keep: Vec<usize> = (0..self.ground.len()).filter(|p| !face.contains(*p)).collect();
        let ground = GroundSet::new(keep.iter().map(|&p| self.ground.label(p).to_string()))?;
        let reindex: HashMap<usize, usize> = keep.iter().enumerate().map(|(n, &p)| (p, n)).collect();
        let gens = self
            .facets
            .iter()
            .filter(|f| face.is_subset(f))
            .map(|f| f.difference(face).iter().map(|p| reindex[&p]).collect())
            .collect();
        Ok(Complex::new(ground, gens))
    }

    /// st_K(σ): faces τ with τ∪σ ∈ K, on the full ground set V.
    pub fn star(&self, face: &VertexSet) -> Result<Complex> {
        if !self.is_face(face) {
            return Err(MacxError::NotAFace(self.ground.display(face)));
        }
        let gens = self.facets.iter().filter(|f| face.is_subset(f)).cloned().collect();
        Ok(Complex::new(self.ground.clone(), gens))
    }

    /// K_I: all faces contained in I, on the ground set I (order inherited).
    pub fn restriction(&self, subset: &VertexSet) -> Complex {
        let keep = subset.to_vec();
        let ground = GroundSet::new(keep.iter().map(|&p| self.ground.label(p).to_string()))
            .expect("restricted labels stay distinct");
        let reindex: HashMap<usize, usize> = keep.iter().enumerate().map(|(n, &p)| (p, n)).collect();
        let gens = self
            .facets
            .iter()
            .map(|f| f.intersection(subset).iter().map(|p| reindex[&p]).collect())
            .collect();
        Complex::new(ground, gens)
    }

    /// K − v = K_{V−v}.
    pub fn deletion(&self, vertex: usize) -> Complex {
        let mut keep = VertexSet::full(self.ground.len());
        keep.remove(vertex);
        self.restriction(&keep)
    }

    /// Simplicial join K * L on the disjoint union of the ground sets,
    /// re-indexed by sorted label order.
    pub fn join(&self, other: &Complex) -> Result<Complex> {
        for l in other.ground.labels() {
            if self.ground.position(l).is_some() {
                return Err(MacxError::LabelCollision(l.clone()));
            }
        }
        let mut labels: Vec<String> = self
            .ground
            .labels()
            .iter()
            .chain(other.ground.labels())
            .cloned()
            .collect();
        labels.sort();
        let ground = GroundSet::new(labels)?;
        let mut gens = Vec::with_capacity(self.facets.len() * other.facets.len());
        for f in &self.facets {
            for g in &other.facets {
                let mut s = VertexSet::empty();
                for p in f.iter() {
                    s.insert(ground.position(self.ground.label(p)).unwrap());
                }
                for p in g.iter() {
                    s.insert(ground.position(other.ground.label(p)).unwrap());
                }
                gens.push(s);
            }
        }
        Ok(Complex::new(ground, gens))
    }

    /// Plain union of two complexes whose ground sets may share labels:
    /// the facet lists are merged and pruned, on the sorted label union.
    pub fn union_with(&self, other: &Complex) -> Result<Complex> {
        let mut labels: BTreeSet<String> = self.ground.labels().iter().cloned().collect();
        labels.extend(other.ground.labels().iter().cloned());
        let ground = GroundSet::new(labels)?;
        let mut gens = Vec::new();
        for (complex, facets) in [(self, &self.facets), (other, &other.facets)] {
            for f in facets {
                gens.push(
                    f.iter()
                        .map(|p| ground.position(complex.ground.label(p)).unwrap())
                        .collect(),
                );
            }
        }
        Ok(Complex::new(ground, gens))
    }

    /// K ∪_α L: the ground sets must intersect exactly in α, and α must be a
    /// face of both complexes.
    pub fn union_along_face(&self, other: &Complex, alpha_labels: &[String]) -> Result<Complex> {
        let alpha: BTreeSet<&str> = alpha_labels.iter().map(|s| s.as_str()).collect();
        for l in self.ground.labels() {
            if other.ground.position(l).is_some() && !alpha.contains(l.as_str()) {
                return Err(MacxError::OverlapOutsideFace(l.clone()));
            }
        }
        let in_self = self.ground.set_from_labels(alpha_labels.iter());
        let in_other = other.ground.set_from_labels(alpha_labels.iter());
        match (in_self, in_other) {
            (Ok(a), Ok(b)) if self.is_face(&a) && other.is_face(&b) => {}
            _ => return Err(MacxError::NotACommonFace),
        }
        self.union_with(other)
    }

    /// All inclusion-minimal non-faces, canonically sorted. Empty exactly
    /// when K is the full simplex.
    ///
    /// A set is a non-face iff it meets the complement of every facet, so the
    /// minimal non-faces are the minimal transversals of the facet-complement
    /// hypergraph; they are computed by Berge multiplication, processing
    /// small complements first to keep intermediate antichains tight.
    pub fn minimal_non_faces(&self) -> Vec<VertexSet> {
        let n = self.ground.len();
        let mut hyperedges: Vec<VertexSet> = self.facets.iter().map(|f| f.complement(n)).collect();
        hyperedges.sort_by_key(|h| h.len());
        let mut transversals: Vec<VertexSet> = vec![VertexSet::empty()];
        for edge in &hyperedges {
            if edge.is_empty() {
                // complement of the full ground set: no transversal exists
                return Vec::new();
            }
            let mut next: Vec<VertexSet> = Vec::new();
            let (hit, miss): (Vec<_>, Vec<_>) =
                transversals.into_iter().partition(|t| t.intersects(edge));
            next.extend(hit);
            for t in miss {
                for v in edge.iter() {
                    let mut cand = t.clone();
                    cand.insert(v);
                    // minimality: drop candidates containing an existing transversal
                    if !next.iter().any(|u| u.is_subset(&cand) && *u != cand) {
                        next.push(cand);
                    }
                }
            }
            // second pass: remove supersets introduced before their subsets
            next.sort_by_key(|t| t.len());
            let mut filtered: Vec<VertexSet> = Vec::new();
            for t in next {
                if !filtered.iter().any(|u| u.is_subset(&t)) {
                    filtered.push(t);
                }
            }
            transversals = filtered;
        }
        transversals.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        transversals
    }

    /// Alexander dual on the same ground set: facets are the complements of
    /// the minimal non-faces. The full simplex has no dual.
    pub fn alexander_dual(&self) -> Result<Complex> {
        if self.is_full_simplex() {
            return Err(MacxError::FullSimplex);
        }
        let n = self.ground.len();
        if n == 0 {
            return Err(MacxError::FullSimplex);
        }
        let gens = self
            .minimal_non_faces()
            .into_iter()
            .map(|t| t.complement(n))
            .collect();
        Ok(Complex { ground: self.ground.clone(), facets: prune_to_antichain_checked(gens) })
    }

    /// Alexander dual with the paper's explicit-index-set convention
    /// K^*_V: the complex is first re-embedded into the larger ground set
    /// (extra labels become ghost vertices), then dualized.
    pub fn alexander_dual_on<S: Into<String>>(&self, ground_labels: Vec<S>) -> Result<Complex> {
        let ground = GroundSet::new(ground_labels)?;
        for l in self.ground.labels() {
            if ground.position(l).is_none() {
                return Err(MacxError::UnknownLabel(l.clone()));
            }
        }
        let gens = self
            .facets
            .iter()
            .map(|f| f.iter().map(|p| ground.position(self.ground.label(p)).unwrap()).collect())
            .collect();
        Complex::new(ground, gens).alexander_dual()
    }

    /// Rebuild the complex after renaming (and possibly identifying)
    /// vertices; the image facet list is pruned to an antichain and the new
    /// ground set is the sorted set of image labels.
    pub fn relabel<F: Fn(&str) -> String>(&self, f: F) -> Result<Complex> {
        let mut labels: BTreeSet<String> = BTreeSet::new();
        for l in self.ground.labels() {
            labels.insert(f(l));
        }
        let ground = GroundSet::new(labels)?;
        let gens = self
            .facets
            .iter()
            .map(|fc| {
                fc.iter()
                    .map(|p| ground.position(&f(self.ground.label(p))).unwrap())
                    .collect()
            })
            .collect();
        Ok(Complex::new(ground, gens))
    }

    /// Positions of `other`'s ground labels inside `self`'s ground set, if
    /// every label is present (used for subcomplex checks).
    pub fn contains_as_subcomplex(&self, other: &Complex) -> bool {
        other.facets.iter().all(|f| {
            let mapped: Option<VertexSet> = f
                .iter()
                .map(|p| self.ground.position(other.ground.label(p)))
                .collect::<Option<_>>();
            mapped.map_or(false, |m| self.is_face(&m))
        })
    }

    /// True when every (dim-1)-face of a pure complex lies in exactly two
    /// facets (the pseudomanifold condition used to validate sphere fixtures).
    pub fn is_closed_pseudomanifold(&self) -> bool {
        let d = self.dim();
        if d < 1 || self.facets.iter().any(|f| f.len() as i64 - 1 != d) {
            return false;
        }
        let mut ridge_count: HashMap<VertexSet, usize> = HashMap::new();
        for f in &self.facets {
            for v in f.iter() {
                let mut r = f.clone();
                r.remove(v);
                *ridge_count.entry(r).or_insert(0) += 1;
            }
        }
        ridge_count.values().all(|&c| c == 2)
    }
}

fn prune_to_antichain_checked(gens: Vec<VertexSet>) -> Vec<VertexSet> {
    prune_to_antichain(gens)
}

/// k-element subsets of a slice, in lexicographic order.
pub(crate) fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let n = items.len();
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().map(|&i| items[i]).collect());
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// A map of complexes determined by a vertex assignment; the image of every
/// facet must be a face of the target.
#[derive(Debug, Clone)]
pub struct SimplicialMap {
    source: Complex,
    target: Complex,
    /// target position of each source ground position
    assignment: Vec<usize>,
}

impl SimplicialMap {
    pub fn new(source: Complex, target: Complex, vertex_map: &HashMap<String, String>) -> Result<SimplicialMap> {
        let mut assignment = Vec::with_capacity(source.ground().len());
        for l in source.ground().labels() {
            let img = vertex_map
                .get(l)
                .ok_or_else(|| MacxError::UnknownLabel(l.clone()))?;
            let pos = target
                .ground()
                .position(img)
                .ok_or_else(|| MacxError::UnknownLabel(img.clone()))?;
            assignment.push(pos);
        }
        let map = SimplicialMap { source, target, assignment };
        map.validate()?;
        Ok(map)
    }

    /// Inclusion of a subcomplex by identical labels.
    pub fn inclusion(source: Complex, target: Complex) -> Result<SimplicialMap> {
        let idmap: HashMap<String, String> = source
            .ground()
            .labels()
            .iter()
            .map(|l| (l.clone(), l.clone()))
            .collect();
        SimplicialMap::new(source, target, &idmap)
    }

    pub fn identity(complex: Complex) -> SimplicialMap {
        let assignment = (0..complex.ground().len()).collect();
        SimplicialMap { source: complex.clone(), target: complex, assignment }
    }

    fn validate(&self) -> Result<()> {
        for f in self.source.facets() {
            let img = self.apply(f);
            if !self.target.is_face(&img) {
                return Err(MacxError::NotSimplicial(self.source.ground().display(f)));
            }
        }
        Ok(())
    }

    pub fn source(&self) -> &Complex {
        &self.source
    }

    pub fn target(&self) -> &Complex {
        &self.target
    }

    /// Image of a face (as a set; degenerate images shrink).
    pub fn apply(&self, face: &VertexSet) -> VertexSet {
        face.iter().map(|p| self.assignment[p]).collect()
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    /// Composition `other ∘ self` (when targets and sources line up by label).
    pub fn compose(&self, other: &SimplicialMap) -> Result<SimplicialMap> {
        let mut assignment = Vec::with_capacity(self.source.ground().len());
        for &mid in &self.assignment {
            let mid_label = self.target.ground().label(mid);
            let pos = other
                .source
                .ground()
                .position(mid_label)
                .ok_or_else(|| MacxError::UnknownLabel(mid_label.to_string()))?;
            assignment.push(other.assignment[pos]);
        }
        let map = SimplicialMap {
            source: self.source.clone(),
            target: other.target.clone(),
            assignment,
        };
        map.validate()?;
        Ok(map)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn boundary_triangle() -> Complex {
        Complex::from_labels(
            vec!["1", "2", "3"],
            vec![vec!["1", "2"], vec!["1", "3"], vec!["2", "3"], vec!["1", "2"]],
        )
        .unwrap()
    }

    #[test]
    fn make_complex_dedups_and_prunes() {
        let k = boundary_triangle();
        assert_eq!(k.facet_count(), 3);
        assert_eq!(k.dim(), 1);
        // subsumed face pruned
        let k2 = Complex::from_labels(
            vec!["1", "2", "3"],
            vec![vec!["1"], vec!["1", "2", "3"]],
        )
        .unwrap();
        assert_eq!(k2.facet_count(), 1);
        assert!(k2.is_full_simplex());
    }

    #[test]
    fn empty_complex_convention() {
        let k = Complex::from_labels(vec!["1", "2", "3"], Vec::<Vec<&str>>::new()).unwrap();
        assert!(k.is_empty_complex());
        assert_eq!(k.ghost_vertices().len(), 3);
        assert_eq!(k.dim(), -1);
        assert!(k.is_face(&VertexSet::empty()));
    }

    #[test]
    fn rejects_duplicate_and_unknown_labels() {
        assert!(matches!(
            Complex::from_labels(vec!["a", "a"], Vec::<Vec<&str>>::new()),
            Err(MacxError::DuplicateLabel(_))
        ));
        assert!(matches!(
            Complex::from_labels(vec!["a"], vec![vec!["b"]]),
            Err(MacxError::UnknownLabel(_))
        ));
    }

    #[test]
    fn faces_listing() {
        let k = boundary_triangle();
        assert_eq!(k.faces_of_dim(1).len(), 3);
        assert_eq!(k.faces_of_dim(2).len(), 0);
        assert_eq!(k.faces_of_dim(-1), vec![VertexSet::empty()]);
        assert_eq!(k.f_vector(1000).unwrap(), vec![3, 3]);
    }

    #[test]
    fn link_and_star() {
        let k = boundary_triangle();
        let v = k.ground().set_from_labels(["1"]).unwrap();
        let link = k.link(&v).unwrap();
        assert_eq!(link.ground().labels(), &["2".to_string(), "3".to_string()]);
        assert_eq!(link.facet_count(), 2);
        assert_eq!(link.dim(), 0);
        let star = k.star(&v).unwrap();
        assert_eq!(star.ground().len(), 3);
        assert_eq!(star.facet_count(), 2);
        // link of the empty face is the complex itself
        assert_eq!(k.link(&VertexSet::empty()).unwrap(), k);
        let bad = k.ground().set_from_labels(["1", "2", "3"]).unwrap();
        assert!(k.link(&bad).is_err());
    }

    #[test]
    fn restriction_and_deletion() {
        let k = boundary_triangle();
        let i = k.ground().set_from_labels(["1", "2"]).unwrap();
        let r = k.restriction(&i);
        assert!(r.is_full_simplex());
        let r0 = k.restriction(&VertexSet::empty());
        assert!(r0.is_empty_complex());
        assert_eq!(k.deletion(0).facet_count(), 1);
    }

    #[test]
    fn join_is_cone_for_a_point() {
        let k = boundary_triangle();
        let p = Complex::from_labels(vec!["p"], vec![vec!["p"]]).unwrap();
        let cone = p.join(&k).unwrap();
        assert_eq!(cone.facet_count(), 3);
        assert_eq!(cone.dim(), 2);
        // label collision refused
        let q = Complex::from_labels(vec!["1"], vec![vec!["1"]]).unwrap();
        assert!(matches!(q.join(&k), Err(MacxError::LabelCollision(_))));
    }

    #[test]
    fn minimal_non_faces_examples() {
        let k = boundary_triangle();
        let mnf = k.minimal_non_faces();
        assert_eq!(mnf.len(), 1);
        assert_eq!(mnf[0].len(), 3);

        let two_edges = Complex::from_labels(
            vec!["1", "2", "3", "4"],
            vec![vec!["1", "2"], vec!["3", "4"]],
        )
        .unwrap();
        let mnf = two_edges.minimal_non_faces();
        assert_eq!(mnf.len(), 4);
        assert!(mnf.iter().all(|t| t.len() == 2));

        let full = Complex::from_labels(vec!["1", "2"], vec![vec!["1", "2"]]).unwrap();
        assert!(full.minimal_non_faces().is_empty());
    }

    #[test]
    fn alexander_dual_of_boundary_is_empty_complex() {
        let k = boundary_triangle();
        let d = k.alexander_dual().unwrap();
        assert!(d.is_empty_complex());
        assert_eq!(d.ground().len(), 3);
        let full = Complex::from_labels(vec!["1", "2"], vec![vec!["1", "2"]]).unwrap();
        assert!(matches!(full.alexander_dual(), Err(MacxError::FullSimplex)));
    }

    #[test]
    fn facet_min_non_face_duality() {
        // I is a facet of K iff its complement is a minimal non-face of the dual
        let k = Complex::from_labels(
            vec!["1", "2", "3", "4"],
            vec![vec!["1", "2", "3"], vec!["2", "4"]],
        )
        .unwrap();
        let dual = k.alexander_dual().unwrap();
        let dual_mnf = dual.minimal_non_faces();
        let n = k.ground().len();
        let complements: Vec<_> = k.facets().iter().map(|f| f.complement(n)).collect();
        assert_eq!(
            complements.iter().cloned().collect::<BTreeSet<_>>(),
            dual_mnf.into_iter().collect::<BTreeSet<_>>()
        );
    }

    #[test]
    fn union_along_face_validation() {
        let k = Complex::from_labels(vec!["1", "2", "a"], vec![vec!["1", "2", "a"]]).unwrap();
        let l = Complex::from_labels(vec!["3", "a"], vec![vec!["3", "a"]]).unwrap();
        let u = k.union_along_face(&l, &["a".to_string()]).unwrap();
        assert_eq!(u.facet_count(), 2);
        assert_eq!(u.ground().len(), 4);
        // overlap outside alpha refused
        let l2 = Complex::from_labels(vec!["2", "a"], vec![vec!["2", "a"]]).unwrap();
        assert!(k.union_along_face(&l2, &["a".to_string()]).is_err());
        // alpha not a common face refused
        let l3 = Complex::from_labels(vec!["3", "a"], vec![vec!["3"]]).unwrap();
        assert!(matches!(
            k.union_along_face(&l3, &["a".to_string()]),
            Err(MacxError::NotACommonFace)
        ));
    }

    #[test]
    fn simplicial_map_validation() {
        let src = boundary_triangle();
        let tgt = Complex::from_labels(vec!["x", "y"], vec![vec!["x", "y"]]).unwrap();
        let mut vm = HashMap::new();
        vm.insert("1".to_string(), "x".to_string());
        vm.insert("2".to_string(), "y".to_string());
        vm.insert("3".to_string(), "x".to_string());
        assert!(SimplicialMap::new(src.clone(), tgt, &vm).is_ok());
        // collapsing an edge onto a vertex of a discrete target is not simplicial
        let discrete = Complex::from_labels(vec!["x", "y"], vec![vec!["x"], vec!["y"]]).unwrap();
        assert!(matches!(
            SimplicialMap::new(src, discrete, &vm),
            Err(MacxError::NotSimplicial(_))
        ));
    }
}
