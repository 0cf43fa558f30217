//! Derived constructions: simplices and their boundaries, the staircase
//! product K ⊠ L, facet cones F(K), barycentric subdivision, and mapping
//! cylinders/cones of simplicial maps.

use crate::bitset::VertexSet;
use crate::complex::{Complex, GroundSet, SimplicialMap};
use crate::error::{MacxError, Result};
use std::collections::HashMap;

/// Reserved label for mapping-cone apexes; no gensym state needed.
pub const APEX_LABEL: &str = "@apex";

/// Full simplex on a nonempty label set.
pub fn simplex<S: Into<String>>(labels: Vec<S>) -> Result<Complex> {
    let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
    if labels.is_empty() {
        return Err(MacxError::EmptyGround);
    }
    let all = labels.clone();
    Complex::from_labels(labels, vec![all])
}

/// Boundary of the full simplex; on a single vertex this is the empty
/// complex with one ghost.
pub fn boundary_simplex<S: Into<String>>(labels: Vec<S>) -> Result<Complex> {
    let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
    if labels.is_empty() {
        return Err(MacxError::EmptyGround);
    }
    let faces: Vec<Vec<String>> = (0..labels.len())
        .map(|skip| {
            labels
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != skip)
                .map(|(_, l)| l.clone())
                .collect()
        })
        .collect();
    Complex::from_labels(labels, faces)
}

/// A complex together with a total order on its ground set, used by the
/// staircase product. The order defaults to ground-set order.
#[derive(Debug, Clone)]
pub struct OrderedComplex {
    complex: Complex,
    /// ground positions listed in increasing order
    order: Vec<usize>,
}

impl OrderedComplex {
    pub fn natural(complex: Complex) -> OrderedComplex {
        let order = (0..complex.ground().len()).collect();
        OrderedComplex { complex, order }
    }

    pub fn with_label_order(complex: Complex, labels: &[String]) -> Result<OrderedComplex> {
        if labels.len() != complex.ground().len() {
            return Err(MacxError::InvalidArgument(
                "order must list every ground label exactly once".into(),
            ));
        }
        let mut order = Vec::with_capacity(labels.len());
        let mut seen = vec![false; labels.len()];
        for l in labels {
            let p = complex
                .ground()
                .position(l)
                .ok_or_else(|| MacxError::UnknownLabel(l.clone()))?;
            if seen[p] {
                return Err(MacxError::DuplicateLabel(l.clone()));
            }
            seen[p] = true;
            order.push(p);
        }
        Ok(OrderedComplex { complex, order })
    }

    pub fn complex(&self) -> &Complex {
        &self.complex
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }
}

/// Composite label for a staircase-product vertex.
pub fn box_label(x: &str, y: &str) -> String {
    format!("({x},{y})")
}

/// Staircase product K ⊠ L: vertices V(K) × V(L); faces are the monotone
/// chains whose projections are faces of K and L. Triangulates |K| × |L|.
pub fn box_product(k: &OrderedComplex, l: &OrderedComplex) -> Result<Complex> {
    let (kc, lc) = (k.complex(), l.complex());
    let rank_k: HashMap<usize, usize> = k.order().iter().enumerate().map(|(r, &p)| (p, r)).collect();
    let rank_l: HashMap<usize, usize> = l.order().iter().enumerate().map(|(r, &p)| (p, r)).collect();

    let mut labels: Vec<String> = Vec::new();
    for p in kc.vertex_support().iter() {
        for q in lc.vertex_support().iter() {
            labels.push(box_label(kc.ground().label(p), lc.ground().label(q)));
        }
    }
    labels.sort();
    if labels.is_empty() {
        return Complex::from_labels(Vec::<String>::new(), Vec::<Vec<String>>::new());
    }
    let ground = GroundSet::new(labels)?;

    let mut gens: Vec<VertexSet> = Vec::new();
    for f in kc.facets() {
        if f.is_empty() {
            continue;
        }
        let mut fs = f.to_vec();
        fs.sort_by_key(|p| rank_k[p]);
        for g in lc.facets() {
            if g.is_empty() {
                continue;
            }
            let mut gs = g.to_vec();
            gs.sort_by_key(|p| rank_l[p]);
            staircases(&fs, &gs, &mut |chain| {
                let set = chain
                    .iter()
                    .map(|&(p, q)| {
                        ground
                            .position(&box_label(kc.ground().label(p), lc.ground().label(q)))
                            .unwrap()
                    })
                    .collect();
                gens.push(set);
            });
        }
    }
    Ok(Complex::new(ground, gens))
}

/// Enumerate the maximal monotone chains of fs × gs (both sorted by their
/// orders): lattice paths from (fs[0], gs[0]) to (fs[p], gs[q]).
fn staircases(fs: &[usize], gs: &[usize], emit: &mut impl FnMut(&[(usize, usize)])) {
    let mut chain: Vec<(usize, usize)> = vec![(fs[0], gs[0])];
    walk(fs, gs, 0, 0, &mut chain, emit);
    fn walk(
        fs: &[usize],
        gs: &[usize],
        i: usize,
        j: usize,
        chain: &mut Vec<(usize, usize)>,
        emit: &mut impl FnMut(&[(usize, usize)]),
    ) {
        if i + 1 == fs.len() && j + 1 == gs.len() {
            emit(chain);
            return;
        }
        if i + 1 < fs.len() {
            chain.push((fs[i + 1], gs[j]));
            walk(fs, gs, i + 1, j, chain, emit);
            chain.pop();
        }
        if j + 1 < gs.len() {
            chain.push((fs[i], gs[j + 1]));
            walk(fs, gs, i, j + 1, chain, emit);
            chain.pop();
        }
    }
}

/// K ⊠ v for a single vertex v of L: the image of K under x ↦ (x, v).
pub fn box_fiber(k: &Complex, v_label: &str) -> Result<Complex> {
    k.relabel(|x| box_label(x, v_label))
}

/// F(K): cone each facet with a fresh vertex `@f0`, `@f1`, … (in canonical
/// facet order). |K| is a deformation retract of |F(K)|.
pub fn facet_cone(k: &Complex) -> Result<(Complex, Vec<String>)> {
    if k.is_empty_complex() {
        return Err(MacxError::EmptyGround);
    }
    let fresh: Vec<String> = (0..k.facets().len()).map(|i| format!("@f{i}")).collect();
    let mut labels: Vec<String> = k.ground().labels().to_vec();
    labels.extend(fresh.iter().cloned());
    labels.sort();
    let ground = GroundSet::new(labels)?;
    let mut gens = Vec::new();
    for (i, f) in k.facets().iter().enumerate() {
        let mut s: VertexSet = f
            .iter()
            .map(|p| ground.position(k.ground().label(p)).unwrap())
            .collect();
        s.insert(ground.position(&fresh[i]).unwrap());
        gens.push(s);
    }
    Ok((Complex::new(ground, gens), fresh))
}

/// Label of a barycentric-subdivision vertex (one per nonempty face).
fn sd_label(k: &Complex, face: &VertexSet) -> String {
    let mut s = String::from("[");
    for (i, p) in face.iter().enumerate() {
        if i > 0 {
            s.push('|');
        }
        s.push_str(k.ground().label(p));
    }
    s.push(']');
    s
}

/// Barycentric subdivision: vertices are the nonempty faces of K, faces are
/// the flags. Homology is unchanged.
pub fn barycentric_subdivision(k: &Complex, face_cap: usize) -> Result<Complex> {
    let faces: Vec<VertexSet> = k
        .all_faces(face_cap)?
        .into_iter()
        .filter(|f| !f.is_empty())
        .collect();
    let mut labels: Vec<String> = faces.iter().map(|f| sd_label(k, f)).collect();
    labels.sort();
    let ground = GroundSet::new(labels)?;
    let mut gens: Vec<VertexSet> = Vec::new();
    // maximal flags: permutations of each facet, taken as nested initial runs
    for facet in k.facets() {
        if facet.is_empty() {
            continue;
        }
        let verts = facet.to_vec();
        permute(&verts, &mut |perm| {
            let mut run = VertexSet::empty();
            let mut flag = VertexSet::empty();
            for &v in perm {
                run.insert(v);
                flag.insert(ground.position(&sd_label(k, &run)).unwrap());
            }
            gens.push(flag);
        });
    }
    Ok(Complex::new(ground, gens))
}

fn permute(items: &[usize], emit: &mut impl FnMut(&[usize])) {
    let mut v = items.to_vec();
    heap_permute(v.len(), &mut v, emit);
    fn heap_permute(n: usize, v: &mut Vec<usize>, emit: &mut impl FnMut(&[usize])) {
        if n <= 1 {
            emit(v);
            return;
        }
        for i in 0..n {
            heap_permute(n - 1, v, emit);
            if n % 2 == 0 {
                v.swap(i, n - 1);
            } else {
                v.swap(0, n - 1);
            }
        }
    }
}

/// The source copy v ↦ (v,1) shared by cylinder and cone.
pub fn cylinder_source_copy(f: &SimplicialMap) -> Result<Complex> {
    f.source().relabel(|x| box_label(x, "1"))
}

/// Mapping cylinder of a simplicial map: (source ⊠ Δ¹) with the level-2
/// copy relabelled through f, unioned with the target. The source embeds as
/// v ↦ (v,1).
pub fn mapping_cylinder(f: &SimplicialMap) -> Result<Complex> {
    let delta1 = simplex(vec!["1", "2"])?;
    let prod = box_product(
        &OrderedComplex::natural(f.source().clone()),
        &OrderedComplex::natural(delta1),
    )?;
    let src_ground = f.source().ground().clone();
    let tgt_ground = f.target().ground().clone();
    let assignment = f.assignment().to_vec();
    let glued = prod.relabel(|l| {
        // labels are "(v,1)" or "(v,2)"
        let inner = &l[1..l.len() - 1];
        let (v, level) = inner.rsplit_once(',').expect("product label");
        if level == "2" {
            let p = src_ground.position(v).expect("source label");
            tgt_ground.label(assignment[p]).to_string()
        } else {
            l.to_string()
        }
    })?;
    glued.union_with(f.target())
}

/// Mapping cone: the cylinder together with a cone (apex `@apex`) on the
/// source copy at level 1.
pub fn mapping_cone(f: &SimplicialMap) -> Result<Complex> {
    let cyl = mapping_cylinder(f)?;
    let copy = cylinder_source_copy(f)?;
    let apex = simplex(vec![APEX_LABEL])?;
    cyl.union_with(&apex.join(&copy)?)
}
