//! Embedded reference complexes: the 4-vertex 2-sphere, the 12-vertex
//! 3-sphere with its simplicial Hopf map onto it, the 7-vertex non-Golod
//! example, and the 55-vertex certification complex assembled from them.
//!
//! Payloads are built deterministically and cached behind `OnceLock`s, so
//! they are byte-identical across runs and race-safe to initialize.

use crate::complex::{Complex, SimplicialMap};
use crate::constructions::{box_label, facet_cone, mapping_cone, mapping_cylinder, simplex, boundary_simplex};
use crate::error::{MacxError, Result};
use std::collections::HashMap;
use std::sync::OnceLock;

/// Facet table of the 12-vertex triangulation of the 3-sphere, row-major.
/// Transcription is not trusted: the fixture tests re-validate it as a
/// pseudomanifold with the homology of S^3.
const S3_12_FACETS: [[&str; 4]; 36] = [
    ["a0", "b0", "c0", "c1"],
    ["a0", "b0", "b1", "c1"],
    ["a0", "a1", "b1", "c1"],
    ["a1", "a2", "b1", "c1"],
    ["a2", "b1", "c1", "c2"],
    ["a2", "b1", "b2", "c2"],
    ["a2", "b0", "b2", "c2"],
    ["a0", "a2", "b0", "c2"],
    ["a0", "b0", "c0", "c2"],
    ["a0", "a2", "b0", "d1"],
    ["a0", "b0", "b1", "d1"],
    ["b0", "b1", "c1", "d1"],
    ["b1", "c1", "c2", "d1"],
    ["a2", "c1", "c2", "d1"],
    ["a0", "a2", "c2", "d1"],
    ["a0", "b1", "d0", "d1"],
    ["b1", "c2", "d0", "d1"],
    ["a0", "c2", "d0", "d1"],
    ["a0", "b1", "d0", "d2"],
    ["b1", "c2", "d0", "d2"],
    ["a0", "c2", "d0", "d2"],
    ["a0", "a1", "b1", "d2"],
    ["a1", "a2", "b1", "d2"],
    ["a2", "b1", "b2", "d2"],
    ["a2", "b0", "b2", "d2"],
    ["b1", "b2", "c2", "d2"],
    ["b0", "b2", "c2", "d2"],
    ["b0", "c0", "c2", "d2"],
    ["b0", "c0", "c1", "d2"],
    ["a0", "c0", "c2", "d2"],
    ["a0", "c0", "c1", "d2"],
    ["a0", "a1", "c1", "d2"],
    ["a1", "a2", "c1", "d2"],
    ["a2", "b0", "d1", "d2"],
    ["b0", "c1", "d1", "d2"],
    ["a2", "c1", "d1", "d2"],
];

const S3_12_VERTICES: [&str; 12] = [
    "a0", "a1", "a2", "b0", "b1", "b2", "c0", "c1", "c2", "d0", "d1", "d2",
];

/// The 4-vertex 2-sphere ∂Δ³ on {a,b,c,d}.
pub fn s2_4() -> &'static Complex {
    static CELL: OnceLock<Complex> = OnceLock::new();
    CELL.get_or_init(|| boundary_simplex(vec!["a", "b", "c", "d"]).expect("static fixture"))
}

/// The 12-vertex 3-sphere.
pub fn s3_12() -> &'static Complex {
    static CELL: OnceLock<Complex> = OnceLock::new();
    CELL.get_or_init(|| {
        Complex::from_labels(
            S3_12_VERTICES.to_vec(),
            S3_12_FACETS.iter().map(|f| f.to_vec()).collect::<Vec<_>>(),
        )
        .expect("static fixture")
    })
}

/// The simplicial Hopf map: a_i ↦ a, b_i ↦ b, c_i ↦ c, d_i ↦ d.
pub fn eta12() -> &'static SimplicialMap {
    static CELL: OnceLock<SimplicialMap> = OnceLock::new();
    CELL.get_or_init(|| {
        let vm: HashMap<String, String> = S3_12_VERTICES
            .iter()
            .map(|v| (v.to_string(), v[..1].to_string()))
            .collect();
        SimplicialMap::new(s3_12().clone(), s2_4().clone(), &vm).expect("eta is simplicial")
    })
}

/// Mapping cylinder of the Hopf map: 16 vertices, homology of S^2.
pub fn eta_cylinder() -> &'static Complex {
    static CELL: OnceLock<Complex> = OnceLock::new();
    CELL.get_or_init(|| mapping_cylinder(eta12()).expect("cylinder of eta"))
}

/// Mapping cone of the Hopf map: the 17-vertex complex carrying the
/// mod-2 Sq^2 obstruction.
pub fn eta_cone() -> &'static Complex {
    static CELL: OnceLock<Complex> = OnceLock::new();
    CELL.get_or_init(|| mapping_cone(eta12()).expect("cone of eta"))
}

/// The 6-vertex complex L on {2,..,7} whose union with a simplex along the
/// facet 2345 dualizes to a non-Golod complex.
pub fn example_534_l() -> &'static Complex {
    static CELL: OnceLock<Complex> = OnceLock::new();
    CELL.get_or_init(|| {
        Complex::from_labels(
            vec!["2", "3", "4", "5", "6", "7"],
            vec![
                vec!["2", "6", "7"],
                vec!["3", "6", "7"],
                vec!["4", "6", "7"],
                vec!["5", "6", "7"],
                vec!["2", "3", "6"],
                vec!["4", "5", "6"],
                vec!["2", "3", "4", "5"],
            ],
        )
        .expect("static fixture")
    })
}

/// Δ^{12345} ∪_{2345} L on seven vertices.
pub fn example_534_union() -> &'static Complex {
    static CELL: OnceLock<Complex> = OnceLock::new();
    CELL.get_or_init(|| {
        let delta = simplex(vec!["1", "2", "3", "4", "5"]).expect("simplex");
        delta
            .union_along_face(
                example_534_l(),
                &["2".into(), "3".into(), "4".into(), "5".into()],
            )
            .expect("gluing along 2345")
    })
}

/// The certification complex and the pieces it is generated from.
#[derive(Debug, Clone)]
pub struct CounterexampleComplex {
    /// the 55-vertex complex K
    pub complex: Complex,
    /// Δ^{V+v0}
    pub simplex_piece: Complex,
    /// (cyl(η) ∪ F(S³)) * w1
    pub cylinder_piece: Complex,
    /// S³ * Δ^{w1,w2}
    pub sphere_join_piece: Complex,
    /// the v ↦ (v,1) copy of the 3-sphere inside K
    pub sphere_copy: Complex,
    /// labels of V (everything except v0, w1, w2)
    pub v_labels: Vec<String>,
}

/// Assemble K = Δ^{V+v0} ∪ ((S³⊠Δ¹ ∪_η S²₄) ∪ F(S³)) * w1 ∪ S³ * Δ^{w1,w2}.
pub fn build_counterexample() -> Result<CounterexampleComplex> {
    let sphere_copy = s3_12().relabel(|l| box_label(l, "1"))?;
    let cyl = eta_cylinder().clone();
    let (f_cone, _) = facet_cone(&sphere_copy)?;
    let glued = cyl.union_with(&f_cone)?;
    let v_labels: Vec<String> = glued.ground().labels().to_vec();

    let cylinder_piece = glued.join(&simplex(vec!["w1"])?)?;
    let sphere_join_piece = sphere_copy.join(&simplex(vec!["w1", "w2"])?)?;
    let mut big = v_labels.clone();
    big.push("v0".to_string());
    let simplex_piece = simplex(big)?;

    let complex = simplex_piece
        .union_with(&cylinder_piece)?
        .union_with(&sphere_join_piece)?;
    Ok(CounterexampleComplex {
        complex,
        simplex_piece,
        cylinder_piece,
        sphere_join_piece,
        sphere_copy,
        v_labels,
    })
}

pub fn counterexample() -> &'static CounterexampleComplex {
    static CELL: OnceLock<CounterexampleComplex> = OnceLock::new();
    CELL.get_or_init(|| build_counterexample().expect("counterexample assembles"))
}

/// Named fixture payloads for the library surface and `.scx` export.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FixtureName {
    S2_4,
    S3_12,
    Eta12,
    Example534L,
    CounterexampleK,
}

impl FixtureName {
    pub fn parse(s: &str) -> Result<FixtureName> {
        match s.to_ascii_lowercase().as_str() {
            "s2_4" => Ok(FixtureName::S2_4),
            "s3_12" => Ok(FixtureName::S3_12),
            "eta12" => Ok(FixtureName::Eta12),
            "example_534_l" | "example534_l" => Ok(FixtureName::Example534L),
            "counterexample_k" | "k" => Ok(FixtureName::CounterexampleK),
            _ => Err(MacxError::UnknownFixture(s.to_string())),
        }
    }
}

#[derive(Debug, Clone)]
pub enum FixturePayload {
    Complex(Complex),
    Map(SimplicialMap),
}

#[derive(Debug, Clone)]
pub struct Fixture {
    pub name: FixtureName,
    pub payload: FixturePayload,
}

pub fn fixture(name: FixtureName) -> Fixture {
    let payload = match name {
        FixtureName::S2_4 => FixturePayload::Complex(s2_4().clone()),
        FixtureName::S3_12 => FixturePayload::Complex(s3_12().clone()),
        FixtureName::Eta12 => FixturePayload::Map(eta12().clone()),
        FixtureName::Example534L => FixturePayload::Complex(example_534_l().clone()),
        FixtureName::CounterexampleK => FixturePayload::Complex(counterexample().complex.clone()),
    };
    Fixture { name, payload }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::RingSpec;
    use crate::homology::{homology, HomologyGroup};

    #[test]
    fn s3_12_is_a_three_sphere() {
        let k = s3_12();
        assert_eq!(k.ground().len(), 12);
        assert_eq!(k.facet_count(), 36);
        assert_eq!(k.dim(), 3);
        assert!(k.is_closed_pseudomanifold());
        let f = k.f_vector(100000).unwrap();
        // Euler characteristic of an odd sphere vanishes
        let chi: i64 = f.iter().enumerate().map(|(d, &n)| if d % 2 == 0 { n as i64 } else { -(n as i64) }).sum();
        assert_eq!(chi, 0);
        let h = homology(k, RingSpec::Z, true, 100000).unwrap();
        assert!(h.group(0).is_zero() && h.group(1).is_zero() && h.group(2).is_zero());
        assert_eq!(h.group(3), HomologyGroup::free(1));
    }

    #[test]
    fn s2_4_is_a_two_sphere() {
        let h = homology(s2_4(), RingSpec::Z, true, 1000).unwrap();
        assert!(h.group(0).is_zero() && h.group(1).is_zero());
        assert_eq!(h.group(2), HomologyGroup::free(1));
    }

    #[test]
    fn eta_is_simplicial_and_surjective_on_faces() {
        let eta = eta12();
        // validation happened at construction; spot-check the vertex images
        assert_eq!(eta.target().ground().len(), 4);
        for f in eta.source().facets() {
            assert!(eta.target().is_face(&eta.apply(f)));
        }
        // every facet of the target sphere is hit by some source face
        for tf in eta.target().facets() {
            let hit = eta
                .source()
                .all_faces(100000)
                .unwrap()
                .iter()
                .any(|sf| eta.apply(sf) == *tf);
            assert!(hit, "facet {:?} not covered", tf);
        }
    }

    #[test]
    fn cylinder_has_sphere_homology() {
        let cyl = eta_cylinder();
        assert_eq!(cyl.ground().len(), 16);
        let h = homology(cyl, RingSpec::Z, true, 100000).unwrap();
        assert!(h.group(0).is_zero() && h.group(1).is_zero() && h.group(3).is_zero());
        assert_eq!(h.group(2), HomologyGroup::free(1));
    }

    #[test]
    fn example_534_shapes() {
        let l = example_534_l();
        assert_eq!(l.facet_count(), 7);
        let k = example_534_union();
        assert_eq!(k.ground().len(), 7);
        // alpha = 2345 is a facet of L, so it survives as a face
        let alpha = k.ground().set_from_labels(["2", "3", "4", "5"]).unwrap();
        assert!(k.is_face(&alpha));
    }

    #[test]
    fn fixture_lookup() {
        assert!(matches!(
            fixture(FixtureName::S3_12).payload,
            FixturePayload::Complex(_)
        ));
        assert!(matches!(fixture(FixtureName::Eta12).payload, FixturePayload::Map(_)));
        assert!(FixtureName::parse("nope").is_err());
        assert_eq!(FixtureName::parse("s3_12").unwrap(), FixtureName::S3_12);
    }
}
