//! Exact simplicial (co)homology: boundary matrices, homology over Z, Q and
//! F_p from one integer Smith normal form, relative homology of a pair,
//! induced maps over fields, torsion scans of links, and the combinatorial
//! Alexander duality check.

use crate::bitset::VertexSet;
use crate::complex::{Complex, SimplicialMap};
use crate::error::{MacxError, Result};
use crate::field::{FieldMatrix, RingSpec, Scalar};
use crate::matrix::{smith_normal_form, IntMatrix, SnfResult};
use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::{BTreeMap, HashMap};

/// Default cap on full face enumeration; the counterexample complex contains
/// a 51-simplex and must never be expanded.
pub const DEFAULT_FACE_CAP: usize = 5_000_000;

/// One homology group: free rank plus torsion coefficients in divisibility
/// order (empty over a field). Torsion serializes as decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomologyGroup {
    pub rank: usize,
    #[serde(serialize_with = "serialize_bigints")]
    pub torsion: Vec<BigInt>,
}

fn serialize_bigints<S: serde::Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|b| b.to_string()))
}

impl HomologyGroup {
    pub fn zero() -> HomologyGroup {
        HomologyGroup { rank: 0, torsion: Vec::new() }
    }

    pub fn free(rank: usize) -> HomologyGroup {
        HomologyGroup { rank, torsion: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }
}

impl std::fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        if self.rank > 0 {
            parts.push(if self.rank == 1 {
                "Z".to_string()
            } else {
                format!("Z^{}", self.rank)
            });
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// Homology groups by degree, starting at `min_degree` (-1 when reduced).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomologySummary {
    pub min_degree: i64,
    pub groups: Vec<HomologyGroup>,
}

impl HomologySummary {
    pub fn group(&self, degree: i64) -> HomologyGroup {
        let idx = degree - self.min_degree;
        if idx < 0 || idx as usize >= self.groups.len() {
            HomologyGroup::zero()
        } else {
            self.groups[idx as usize].clone()
        }
    }

    pub fn max_degree(&self) -> i64 {
        self.min_degree + self.groups.len() as i64 - 1
    }

    pub fn is_trivial(&self) -> bool {
        self.groups.iter().all(|g| g.is_zero())
    }

    pub fn has_torsion(&self) -> bool {
        self.groups.iter().any(|g| !g.torsion.is_empty())
    }

    pub fn nonzero_degrees(&self) -> Vec<i64> {
        (0..self.groups.len())
            .filter(|&i| !self.groups[i].is_zero())
            .map(|i| i as i64 + self.min_degree)
            .collect()
    }

    /// The reduced cohomology groups from homology via universal
    /// coefficients: rank carries over, torsion shifts up one degree.
    pub fn cohomology_group(&self, degree: i64) -> HomologyGroup {
        HomologyGroup {
            rank: self.group(degree).rank,
            torsion: self.group(degree - 1).torsion,
        }
    }
}

/// Canonically ordered faces of a complex, grouped by dimension, with
/// position lookup. Dimension -1 holds the empty face.
pub struct FaceTable {
    pub by_dim: BTreeMap<i64, Vec<VertexSet>>,
    pub index: BTreeMap<i64, HashMap<VertexSet, usize>>,
}

impl FaceTable {
    pub fn build(k: &Complex, cap: usize) -> Result<FaceTable> {
        let mut by_dim: BTreeMap<i64, Vec<VertexSet>> = BTreeMap::new();
        for f in k.all_faces(cap)? {
            by_dim.entry(f.len() as i64 - 1).or_default().push(f);
        }
        let index = by_dim
            .iter()
            .map(|(&d, faces)| {
                (d, faces.iter().enumerate().map(|(i, f)| (f.clone(), i)).collect())
            })
            .collect();
        Ok(FaceTable { by_dim, index })
    }

    pub fn faces(&self, d: i64) -> &[VertexSet] {
        self.by_dim.get(&d).map(|v| v.as_slice()).unwrap_or(&[])
    }

    pub fn count(&self, d: i64) -> usize {
        self.faces(d).len()
    }

    pub fn position(&self, d: i64, face: &VertexSet) -> Option<usize> {
        self.index.get(&d)?.get(face).copied()
    }

    pub fn total(&self) -> usize {
        self.by_dim.values().map(|v| v.len()).sum()
    }
}

/// The boundary matrix ∂_d : C_d → C_{d-1} with the orientation induced by
/// ground-set order; rows are (d-1)-faces, columns are d-faces. With
/// `reduced`, dimension -1 is the empty face and ∂_0 is the augmentation.
pub fn boundary_matrix_from_table(table: &FaceTable, d: i64, reduced: bool) -> IntMatrix {
    let cols = table.faces(d);
    let rows_dim = d - 1;
    let n_rows = if rows_dim == -1 && !reduced { 0 } else { table.count(rows_dim) };
    let mut m = IntMatrix::zero(n_rows, cols.len());
    if n_rows == 0 {
        return m;
    }
    for (j, face) in cols.iter().enumerate() {
        for (t, v) in face.iter().enumerate() {
            let mut sub = face.clone();
            sub.remove(v);
            let i = table
                .position(rows_dim, &sub)
                .expect("face boundary must be present");
            let sign = if t % 2 == 0 { 1 } else { -1 };
            m.set(i, j, BigInt::from(sign));
        }
    }
    m
}

/// Standalone boundary-matrix entry point (`boundary_matrix` operation).
pub fn boundary_matrix(k: &Complex, d: i64, reduced: bool, cap: usize) -> Result<IntMatrix> {
    let table = FaceTable::build(k, cap)?;
    Ok(boundary_matrix_from_table(&table, d, reduced))
}

fn group_from_snf(
    ring: RingSpec,
    n_d: usize,
    snf_d: &SnfResult,
    snf_up: &SnfResult,
) -> HomologyGroup {
    match ring {
        RingSpec::Z => HomologyGroup {
            rank: n_d - snf_d.rank() - snf_up.rank(),
            torsion: snf_up.torsion(),
        },
        RingSpec::Q => HomologyGroup::free(n_d - snf_d.rank() - snf_up.rank()),
        RingSpec::Fp(p) => {
            let p = BigInt::from(p);
            let rank_p = |snf: &SnfResult| {
                snf.diagonal.iter().filter(|v| !(*v % &p).is_zero()).count()
            };
            HomologyGroup::free(n_d - rank_p(snf_d) - rank_p(snf_up))
        }
    }
}

/// Homology of a complex over the chosen ring. Reduced homology includes
/// degree -1; the empty complex has reduced homology of rank 1 there.
/// A single integer Smith normal form per degree serves every ring: the
/// rank over F_p counts invariant factors prime to p.
pub fn homology(k: &Complex, ring: RingSpec, reduced: bool, cap: usize) -> Result<HomologySummary> {
    let table = FaceTable::build(k, cap)?;
    let min_degree = if reduced { -1 } else { 0 };
    let max_degree = k.dim();
    if max_degree < min_degree {
        return Ok(HomologySummary { min_degree, groups: Vec::new() });
    }
    let degrees: Vec<i64> = (min_degree..=max_degree).collect();
    // SNF of every boundary matrix in range, plus one above
    let snfs: BTreeMap<i64, SnfResult> = degrees
        .iter()
        .copied()
        .chain(std::iter::once(max_degree + 1))
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|d| {
            let m = boundary_matrix_from_table(&table, d, reduced);
            (d, smith_normal_form(&m, false))
        })
        .collect();
    let groups = degrees
        .iter()
        .map(|&d| group_from_snf(ring, table.count(d), &snfs[&d], &snfs[&(d + 1)]))
        .collect();
    Ok(HomologySummary { min_degree, groups })
}

/// Relative homology H_*(K, A). The relative chain complex is spanned by the
/// faces of K not in A; boundary entries landing in A are dropped.
pub fn relative_homology(
    k: &Complex,
    a: &Complex,
    ring: RingSpec,
    cap: usize,
) -> Result<HomologySummary> {
    if !k.contains_as_subcomplex(a) {
        return Err(MacxError::InvalidArgument(
            "second complex is not a subcomplex of the first".into(),
        ));
    }
    let table = FaceTable::build(k, cap)?;
    // faces of A translated into K's ground positions
    let a_faces: std::collections::HashSet<VertexSet> = a
        .all_faces(cap)?
        .into_iter()
        .map(|f| {
            f.iter()
                .map(|p| k.ground().position(a.ground().label(p)).unwrap())
                .collect()
        })
        .collect();
    let mut rel: BTreeMap<i64, Vec<VertexSet>> = BTreeMap::new();
    for (&d, faces) in &table.by_dim {
        if d < 0 {
            continue;
        }
        let kept: Vec<VertexSet> = faces.iter().filter(|f| !a_faces.contains(f)).cloned().collect();
        if !kept.is_empty() {
            rel.insert(d, kept);
        }
    }
    let rel_index: BTreeMap<i64, HashMap<VertexSet, usize>> = rel
        .iter()
        .map(|(&d, faces)| (d, faces.iter().enumerate().map(|(i, f)| (f.clone(), i)).collect()))
        .collect();
    let count = |d: i64| rel.get(&d).map(|v| v.len()).unwrap_or(0);
    let max_degree = k.dim();
    if max_degree < 0 {
        return Ok(HomologySummary { min_degree: 0, groups: Vec::new() });
    }
    let boundary = |d: i64| -> IntMatrix {
        let cols: &[VertexSet] = rel.get(&d).map(|v| v.as_slice()).unwrap_or(&[]);
        let mut m = IntMatrix::zero(count(d - 1), cols.len());
        for (j, face) in cols.iter().enumerate() {
            for (t, v) in face.iter().enumerate() {
                let mut sub = face.clone();
                sub.remove(v);
                if let Some(&i) = rel_index.get(&(d - 1)).and_then(|ix| ix.get(&sub)) {
                    let sign = if t % 2 == 0 { 1 } else { -1 };
                    m.set(i, j, BigInt::from(sign));
                }
            }
        }
        m
    };
    let snfs: BTreeMap<i64, SnfResult> = (0..=max_degree + 1)
        .into_par_iter()
        .map(|d| (d, smith_normal_form(&boundary(d), false)))
        .collect();
    let groups = (0..=max_degree)
        .map(|d| group_from_snf(ring, count(d), &snfs[&d], &snfs[&(d + 1)]))
        .collect();
    Ok(HomologySummary { min_degree: 0, groups })
}

/// Reduced homology of a complex over a field, with explicit cycle
/// representatives per degree and the solves needed to express classes.
pub struct FieldHomology {
    pub ring: RingSpec,
    pub table: FaceTable,
    /// homology basis per degree: cycle representatives as dense vectors
    pub reps: BTreeMap<i64, Vec<Vec<Scalar>>>,
    boundaries: BTreeMap<i64, FieldMatrix>,
}

impl FieldHomology {
    pub fn compute(k: &Complex, ring: RingSpec, cap: usize) -> Result<FieldHomology> {
        ring.require_field()?;
        let table = FaceTable::build(k, cap)?;
        let max_degree = k.dim();
        let mut boundaries: BTreeMap<i64, FieldMatrix> = BTreeMap::new();
        for d in -1..=max_degree + 1 {
            let int_m = boundary_matrix_from_table(&table, d, true);
            let mut m = FieldMatrix::zero(ring, int_m.rows(), int_m.cols());
            for r in 0..int_m.rows() {
                for (&c, v) in int_m.row(r) {
                    m.data[r][c] = ring.from_bigint(v);
                }
            }
            boundaries.insert(d, m);
        }
        let mut reps: BTreeMap<i64, Vec<Vec<Scalar>>> = BTreeMap::new();
        for d in -1..=max_degree {
            let n_d = table.count(d);
            if n_d == 0 {
                reps.insert(d, Vec::new());
                continue;
            }
            let cycles = boundaries[&d].null_space();
            let boundary_up = &boundaries[&(d + 1)];
            // columns: boundaries first, then cycle basis; cycle columns that
            // become pivots form a homology basis
            let mut cols: Vec<Vec<Scalar>> = Vec::new();
            for c in 0..boundary_up.cols {
                cols.push(boundary_up.column(c));
            }
            let n_bd = cols.len();
            cols.extend(cycles.iter().cloned());
            let m = FieldMatrix::from_columns(ring, n_d, &cols);
            let (_, pivots) = m.row_reduce();
            let chosen: Vec<Vec<Scalar>> = pivots
                .iter()
                .filter(|&&c| c >= n_bd)
                .map(|&c| cycles[c - n_bd].clone())
                .collect();
            reps.insert(d, chosen);
        }
        Ok(FieldHomology { ring, table, reps, boundaries })
    }

    pub fn dim(&self, degree: i64) -> usize {
        self.reps.get(&degree).map(|v| v.len()).unwrap_or(0)
    }

    pub fn summary(&self) -> HomologySummary {
        let min_degree = -1;
        let max = self.reps.keys().max().copied().unwrap_or(-1);
        let groups = (min_degree..=max)
            .map(|d| HomologyGroup::free(self.dim(d)))
            .collect();
        HomologySummary { min_degree, groups }
    }

    pub fn boundary(&self, d: i64) -> Option<&FieldMatrix> {
        self.boundaries.get(&d)
    }

    pub fn is_cycle(&self, degree: i64, chain: &[Scalar]) -> bool {
        match self.boundaries.get(&degree) {
            None => true,
            Some(b) => b.apply(chain).iter().all(|v| v.is_zero()),
        }
    }

    pub fn is_boundary(&self, degree: i64, chain: &[Scalar]) -> bool {
        match self.boundaries.get(&(degree + 1)) {
            None => chain.iter().all(|v| v.is_zero()),
            Some(b) => {
                if b.cols == 0 {
                    chain.iter().all(|v| v.is_zero())
                } else {
                    b.solve(chain).is_some()
                }
            }
        }
    }

    /// Coordinates of a cycle's class in the chosen homology basis.
    pub fn class_coordinates(&self, degree: i64, cycle: &[Scalar]) -> Option<Vec<Scalar>> {
        let reps = self.reps.get(&degree)?;
        let n_d = self.table.count(degree);
        assert_eq!(cycle.len(), n_d);
        let boundary_up = &self.boundaries[&(degree + 1)];
        let mut cols: Vec<Vec<Scalar>> = Vec::new();
        for c in 0..boundary_up.cols {
            cols.push(boundary_up.column(c));
        }
        let n_bd = cols.len();
        cols.extend(reps.iter().cloned());
        let m = FieldMatrix::from_columns(self.ring, n_d, &cols);
        let sol = m.solve(cycle)?;
        Some(sol[n_bd..].to_vec())
    }
}

/// Parity sign of the permutation sorting the image positions of an
/// injectively-mapped face (None when the image degenerates).
pub fn image_sign(face: &VertexSet, assignment: &[usize]) -> Option<i32> {
    let imgs: Vec<usize> = face.iter().map(|p| assignment[p]).collect();
    let mut sorted = imgs.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != imgs.len() {
        return None;
    }
    let mut inversions = 0;
    for i in 0..imgs.len() {
        for j in i + 1..imgs.len() {
            if imgs[i] > imgs[j] {
                inversions += 1;
            }
        }
    }
    Some(if inversions % 2 == 0 { 1 } else { -1 })
}

/// Matrix of H̃_d(f) over a field, with respect to the computed homology
/// bases (rows: target basis, cols: source basis).
pub fn induced_map(
    f: &SimplicialMap,
    degree: i64,
    ring: RingSpec,
    cap: usize,
) -> Result<Vec<Vec<Scalar>>> {
    let src = FieldHomology::compute(f.source(), ring, cap)?;
    let tgt = FieldHomology::compute(f.target(), ring, cap)?;
    induced_map_with(&src, &tgt, f, degree)
}

/// As [`induced_map`] with precomputed homology on both sides.
pub fn induced_map_with(
    src: &FieldHomology,
    tgt: &FieldHomology,
    f: &SimplicialMap,
    degree: i64,
) -> Result<Vec<Vec<Scalar>>> {
    let ring = src.ring;
    if ring != tgt.ring {
        return Err(MacxError::MismatchedRing(format!("{} vs {}", ring, tgt.ring)));
    }
    let rows = tgt.dim(degree);
    let cols = src.dim(degree);
    let mut out = vec![vec![ring.zero(); cols]; rows];
    if rows == 0 || cols == 0 {
        return Ok(out);
    }
    let n_tgt = tgt.table.count(degree);
    for (j, rep) in src.reps[&degree].iter().enumerate() {
        let mut image = vec![ring.zero(); n_tgt];
        for (idx, coeff) in rep.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            let face = &src.table.faces(degree)[idx];
            let Some(sign) = image_sign(face, f.assignment()) else {
                continue;
            };
            let img_face = f.apply(face);
            let t_idx = tgt
                .table
                .position(degree, &img_face)
                .expect("simplicial image face missing from target");
            let signed = if sign > 0 { coeff.clone() } else { coeff.neg() };
            image[t_idx] = image[t_idx].add(&signed);
        }
        let coords = tgt
            .class_coordinates(degree, &image)
            .expect("chain map must send cycles to cycles");
        for (i, v) in coords.into_iter().enumerate() {
            out[i][j] = v;
        }
    }
    Ok(out)
}

/// True when every entry of the induced map vanishes in every degree.
pub fn induced_map_is_zero(f: &SimplicialMap, ring: RingSpec, cap: usize) -> Result<bool> {
    let src = FieldHomology::compute(f.source(), ring, cap)?;
    let tgt = FieldHomology::compute(f.target(), ring, cap)?;
    let max = f.source().dim().max(f.target().dim());
    for d in -1..=max {
        let m = induced_map_with(&src, &tgt, f, d)?;
        if m.iter().flatten().any(|v| !v.is_zero()) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A face whose link has integral torsion.
#[derive(Debug, Clone, Serialize)]
pub struct TorsionOffender {
    pub face: Vec<String>,
    pub degree: i64,
    pub torsion: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TorsionScanReport {
    pub faces_scanned: usize,
    pub offenders: Vec<TorsionOffender>,
}

impl TorsionScanReport {
    pub fn torsion_free(&self) -> bool {
        self.offenders.is_empty()
    }
}

/// Scan every link of every face for integral torsion; an empty offender
/// list certifies the complex torsion-free in the link-wise sense.
pub fn torsion_scan_links(k: &Complex, cap: usize) -> Result<TorsionScanReport> {
    let faces = k.all_faces(cap)?;
    let mut offenders: Vec<TorsionOffender> = faces
        .par_iter()
        .map(|face| -> Result<Option<TorsionOffender>> {
            let link = k.link(face).expect("enumerated face");
            let h = homology(&link, RingSpec::Z, true, cap)?;
            for d in -1..=h.max_degree() {
                let g = h.group(d);
                if !g.torsion.is_empty() {
                    return Ok(Some(TorsionOffender {
                        face: k.ground().labels_of(face),
                        degree: d,
                        torsion: g.torsion.iter().map(|t| t.to_string()).collect(),
                    }));
                }
            }
            Ok(None)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    offenders.sort_by(|a, b| a.face.cmp(&b.face));
    Ok(TorsionScanReport { faces_scanned: faces.len(), offenders })
}

#[derive(Debug, Clone, Serialize)]
pub struct DualityMismatch {
    pub degree: i64,
    pub dual_side: String,
    pub primal_side: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct DualityReport {
    pub ground_size: usize,
    pub degrees_checked: Vec<i64>,
    pub mismatches: Vec<DualityMismatch>,
}

impl DualityReport {
    pub fn holds(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Verify H̃_i(K^*; Z) ≅ H̃^{m-i-3}(K; Z) in every degree by computing both
/// sides independently (the dual by its own chain complex, the primal
/// cohomology from integral homology by universal coefficients).
pub fn alexander_duality_check(k: &Complex, cap: usize) -> Result<DualityReport> {
    let dual = k.alexander_dual()?;
    let m = k.ground().len() as i64;
    let h_dual = homology(&dual, RingSpec::Z, true, cap)?;
    let h_primal = homology(k, RingSpec::Z, true, cap)?;
    let mut degrees: Vec<i64> = (-1..=dual.dim()).collect();
    for d in -1..=h_primal.max_degree() {
        let i = m - d - 3;
        if !degrees.contains(&i) {
            degrees.push(i);
        }
    }
    degrees.sort_unstable();
    let mut mismatches = Vec::new();
    for &i in &degrees {
        let left = h_dual.group(i);
        let right = h_primal.cohomology_group(m - i - 3);
        if left != right {
            mismatches.push(DualityMismatch {
                degree: i,
                dual_side: left.to_string(),
                primal_side: right.to_string(),
            });
        }
    }
    Ok(DualityReport { ground_size: m as usize, degrees_checked: degrees, mismatches })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{boundary_simplex, simplex};

    pub(crate) fn rp2_6() -> Complex {
        Complex::from_labels(
            vec!["1", "2", "3", "4", "5", "6"],
            vec![
                vec!["1", "2", "3"],
                vec!["1", "2", "4"],
                vec!["1", "3", "5"],
                vec!["1", "4", "6"],
                vec!["1", "5", "6"],
                vec!["2", "3", "6"],
                vec!["2", "4", "5"],
                vec!["2", "5", "6"],
                vec!["3", "4", "5"],
                vec!["3", "4", "6"],
            ],
        )
        .unwrap()
    }

    #[test]
    fn boundary_squares_to_zero() {
        for k in [rp2_6(), boundary_simplex(vec!["1", "2", "3", "4"]).unwrap()] {
            let table = FaceTable::build(&k, 100000).unwrap();
            for d in 0..=k.dim() {
                let a = boundary_matrix_from_table(&table, d, true);
                let b = boundary_matrix_from_table(&table, d + 1, true);
                assert!(a.multiply(&b).is_zero(), "dd=0 at degree {d}");
            }
        }
    }

    #[test]
    fn circle_homology() {
        let k = boundary_simplex(vec!["1", "2", "3"]).unwrap();
        let h = homology(&k, RingSpec::Z, true, 1000).unwrap();
        assert_eq!(h.group(0), HomologyGroup::zero());
        assert_eq!(h.group(1), HomologyGroup::free(1));
        // rank of the edge boundary matrix is 2
        let table = FaceTable::build(&k, 1000).unwrap();
        let d1 = boundary_matrix_from_table(&table, 1, false);
        assert_eq!(smith_normal_form(&d1, false).rank(), 2);
    }

    #[test]
    fn empty_complex_reduced_homology() {
        let k = Complex::from_labels(vec!["a"], Vec::<Vec<&str>>::new()).unwrap();
        let h = homology(&k, RingSpec::Z, true, 1000).unwrap();
        assert_eq!(h.group(-1), HomologyGroup::free(1));
        assert!(h.group(0).is_zero());
    }

    #[test]
    fn projective_plane_torsion() {
        let k = rp2_6();
        assert!(k.is_closed_pseudomanifold());
        let h = homology(&k, RingSpec::Z, true, 100000).unwrap();
        assert_eq!(h.group(0), HomologyGroup::zero());
        assert_eq!(h.group(1), HomologyGroup { rank: 0, torsion: vec![BigInt::from(2)] });
        assert_eq!(h.group(2), HomologyGroup::zero());
        // over F2 both middle groups get a dimension
        let h2 = homology(&k, RingSpec::F2, true, 100000).unwrap();
        assert_eq!(h2.group(1), HomologyGroup::free(1));
        assert_eq!(h2.group(2), HomologyGroup::free(1));
        // over Q everything is gone
        let hq = homology(&k, RingSpec::Q, true, 100000).unwrap();
        assert!(hq.is_trivial());
    }

    #[test]
    fn universal_coefficients_consistency() {
        // dim_Fp H_i = rank_i + #p-torsion in degrees i and i-1
        let k = rp2_6();
        let hz = homology(&k, RingSpec::Z, true, 100000).unwrap();
        for p in [2u64, 3, 5] {
            let hp = homology(&k, RingSpec::Fp(p), true, 100000).unwrap();
            for d in 0..=2 {
                let count = |deg: i64| {
                    hz.group(deg)
                        .torsion
                        .iter()
                        .filter(|t| (*t % BigInt::from(p)).is_zero())
                        .count()
                };
                let expect = hz.group(d).rank + count(d) + count(d - 1);
                assert_eq!(hp.group(d).rank, expect, "p={p} d={d}");
            }
        }
    }

    #[test]
    fn relative_homology_of_disk_boundary() {
        let disk = simplex(vec!["1", "2", "3"]).unwrap();
        let circle = boundary_simplex(vec!["1", "2", "3"]).unwrap();
        let h = relative_homology(&disk, &circle, RingSpec::Z, 1000).unwrap();
        assert_eq!(h.group(2), HomologyGroup::free(1));
        assert!(h.group(0).is_zero() && h.group(1).is_zero());
        // (K, K) vanishes
        let hh = relative_homology(&disk, &disk, RingSpec::Z, 1000).unwrap();
        assert!(hh.is_trivial());
        // not a subcomplex is refused
        let other = simplex(vec!["9"]).unwrap();
        assert!(relative_homology(&disk, &other, RingSpec::Z, 1000).is_err());
    }

    #[test]
    fn induced_map_identity_and_collapse() {
        let k = boundary_simplex(vec!["1", "2", "3"]).unwrap();
        let id = SimplicialMap::identity(k.clone());
        let m = induced_map(&id, 1, RingSpec::Q, 1000).unwrap();
        assert_eq!(m.len(), 1);
        assert_eq!(m[0][0], RingSpec::Q.one());
        // the circle mapping into a disk kills H_1
        let disk = simplex(vec!["1", "2", "3"]).unwrap();
        let incl = SimplicialMap::inclusion(k.clone(), disk).unwrap();
        assert!(induced_map_is_zero(&incl, RingSpec::Q, 1000).unwrap());
    }

    #[test]
    fn torsion_scan_flags_rp2_at_empty_face() {
        let report = torsion_scan_links(&rp2_6(), 100000).unwrap();
        assert!(!report.torsion_free());
        assert_eq!(report.offenders.len(), 1);
        assert!(report.offenders[0].face.is_empty());
        // sphere links are clean
        let s = boundary_simplex(vec!["1", "2", "3", "4"]).unwrap();
        assert!(torsion_scan_links(&s, 100000).unwrap().torsion_free());
    }

    #[test]
    fn duality_check_on_small_cases() {
        // boundary sphere: dual is the empty complex
        let k = boundary_simplex(vec!["1", "2", "3", "4"]).unwrap();
        let r = alexander_duality_check(&k, 100000).unwrap();
        assert!(r.holds(), "{:?}", r.mismatches);
        // the projective plane reproduces its Z/2 on the dual side
        let r = alexander_duality_check(&tests::rp2_6(), 1000000).unwrap();
        assert!(r.holds(), "{:?}", r.mismatches);
    }
}
