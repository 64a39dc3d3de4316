mod common;

use common::{flag_fixtures, fx, random_flag_complex};
use num_rational::Ratio;
use proptest::prelude::*;
use raag_core::complex::{Simplex, SimplicialComplex};
use raag_core::homology::{betti_fp, simplicial_chain_complex};
use raag_core::models::*;

fn s(v: &[u32]) -> Simplex {
    Simplex::new(v.to_vec()).unwrap()
}

fn betti2(c: &CubeComplex) -> Vec<usize> {
    betti_fp(&c.chain_complex(), 2).unwrap()
}

#[test]
fn poset_complex_examples() {
    let k = davis_poset_complex(&fx("simplex(0)"));
    assert_eq!(k.complex.f_vector(), vec![2, 1]);
    let k = davis_poset_complex(&fx("simplex(1)"));
    assert_eq!(k.complex.vertex_count(), 4);
    let k = davis_poset_complex(&fx("cycle(3)"));
    assert_eq!(k.complex.vertex_count(), 7);
    assert_eq!(k.complex.euler_characteristic(), 1);
}

#[test]
fn poset_complex_is_contractible_on_fixtures() {
    for l in flag_fixtures().into_iter().filter(|l| l.num_cells() < 200) {
        assert_eq!(davis_poset_complex(&l).complex.euler_characteristic(), 1, "{:?}", l.name());
    }
}

#[test]
fn fiber_dimension_examples() {
    let k = davis_poset_complex(&fx("simplex(1)"));
    let vertex_of = |label: &[u32]| k.labels.iter().position(|l| l.vertices() == label).unwrap() as u32;
    assert_eq!(fiber_dimension(&k, &s(&[k.apex])).unwrap(), 0);
    assert_eq!(fiber_dimension(&k, &s(&[vertex_of(&[0, 1])])).unwrap(), 2);
    assert_eq!(fiber_dimension(&k, &s(&[vertex_of(&[0]), vertex_of(&[0, 1])])).unwrap(), 1);
    assert!(fiber_dimension(&k, &s(&[vertex_of(&[0]), vertex_of(&[1])])).is_err());
}

#[test]
fn fiber_dimension_zero_iff_apex() {
    for l in [fx("cycle(5)"), fx("octahedron"), fx("path(3)")] {
        let k = davis_poset_complex(&l);
        for tau in k.complex.cells() {
            let zero = fiber_dimension(&k, tau).unwrap() == 0;
            assert_eq!(zero, tau.contains_vertex(k.apex));
        }
    }
}

#[test]
fn fiber_dimension_is_monotone() {
    for l in [fx("cycle(4)"), fx("simplex(2)"), fx("disk_flag")] {
        let k = davis_poset_complex(&l);
        for tau in k.complex.cells().filter(|t| !t.contains_vertex(k.apex)) {
            let m = k.min_label(tau).unwrap().clone();
            for face in tau.all_faces().filter(|f| !f.is_empty()) {
                let mf = k.min_label(&face).unwrap();
                assert!(m.is_face_of(mf));
                assert!(fiber_dimension(&k, &face).unwrap() >= fiber_dimension(&k, tau).unwrap());
            }
        }
    }
}

#[test]
fn euler_characteristic_of_toral_model_examples() {
    assert_eq!(euler_characteristic_xl(&fx("discrete(2)")), -1);
    assert_eq!(euler_characteristic_xl(&fx("simplex(1)")), 0);
    assert_eq!(euler_characteristic_xl(&fx("cycle(4)")), 1);
}

#[test]
fn salvetti_examples() {
    assert_eq!(salvetti_complex(&fx("simplex(0)")).unwrap().cell_counts(), vec![1, 1]);
    assert_eq!(salvetti_complex(&fx("simplex(1)")).unwrap().cell_counts(), vec![1, 2, 1]);
    let c4 = salvetti_complex(&fx("cycle(4)")).unwrap();
    assert_eq!(c4.cell_counts(), vec![1, 4, 4]);
    assert_eq!(c4.euler_characteristic(), 1);
    assert!(salvetti_complex(&fx("rp2_6")).is_err());
}

#[test]
fn salvetti_boundaries_vanish() {
    for l in flag_fixtures().into_iter().filter(|l| l.num_cells() < 400) {
        let x = salvetti_complex(&l).unwrap();
        assert!(x.boundaries.iter().all(|m| m.is_zero()), "{:?}", l.name());
        assert_eq!(x.euler_characteristic(), 1 - l.euler_characteristic());
    }
}

#[test]
fn cover_examples() {
    let two = fx("discrete(2)");
    let c = finite_cover(&two, &FiniteQuotientSpec::uniform(2, 3)).unwrap();
    assert_eq!(c.cell_counts(), vec![9, 18]);
    assert_eq!(betti2(&c), vec![1, 10]);

    let edge = fx("simplex(1)");
    for k in 1..=4 {
        let c = finite_cover(&edge, &FiniteQuotientSpec::uniform(2, k)).unwrap();
        assert_eq!(c.index(), k * k);
        assert_eq!(betti2(&c), vec![1, 2, 1]);
    }

    let base = salvetti_complex(&fx("cycle(4)")).unwrap();
    let trivial = finite_cover(&fx("cycle(4)"), &FiniteQuotientSpec::trivial(4)).unwrap();
    assert_eq!(trivial.cell_counts(), base.cell_counts());
    assert_eq!(betti2(&trivial), betti2(&base));
}

#[test]
fn cover_rejects_bad_specs() {
    let l = fx("discrete(2)");
    assert!(finite_cover(&l, &FiniteQuotientSpec::diagonal(vec![0, 2])).is_err());
    assert!(finite_cover(&l, &FiniteQuotientSpec::uniform(3, 2)).is_err());
}

#[test]
fn cyclic_cover_of_wedge() {
    // F_2 → Z/6 with a ↦ 2, b ↦ 3 is onto; b_1 = 6·1 + 1
    let spec = FiniteQuotientSpec { moduli: vec![6], images: vec![vec![2], vec![3]] };
    let c = finite_cover(&fx("discrete(2)"), &spec).unwrap();
    assert_eq!(c.index(), 6);
    assert_eq!(betti2(&c), vec![1, 7]);
    // a ↦ 2, b ↦ 4 generates the index-3 subgroup
    let spec = FiniteQuotientSpec { moduli: vec![6], images: vec![vec![2], vec![4]] };
    assert_eq!(finite_cover(&fx("discrete(2)"), &spec).unwrap().index(), 3);
}

#[test]
fn growth_two_points() {
    let chain: Vec<_> = (2..=5).map(|k| FiniteQuotientSpec::uniform(2, k)).collect();
    let g = growth_experiment(&fx("discrete(2)"), 2, &chain).unwrap();
    let r1: Vec<Ratio<i64>> = g.rows.iter().map(|r| r.ratios[1]).collect();
    assert_eq!(r1, vec![Ratio::new(5, 4), Ratio::new(10, 9), Ratio::new(17, 16), Ratio::new(26, 25)]);
    assert_eq!(g.reference, vec![0, 1]);
    assert!(g.rows.iter().all(|r| r.exact_match() == Some(true)));
    assert!(g.render_report().contains("EXACT match"));
    assert!(g.render_report().contains(NON_RESIDUAL_CAVEAT));
}

#[test]
fn growth_torus() {
    let chain: Vec<_> = (2..=4).map(|k| FiniteQuotientSpec::uniform(2, k)).collect();
    let g = growth_experiment(&fx("simplex(1)"), 2, &chain).unwrap();
    for (row, k) in g.rows.iter().zip(2i64..) {
        assert_eq!(row.betti, vec![1, 2, 1]);
        assert_eq!(row.ratios[1], Ratio::new(2, k * k));
        assert_eq!(row.ratios[2], Ratio::new(1, k * k));
    }
    assert_eq!(g.reference, vec![0, 0, 0]);
}

#[test]
fn growth_square() {
    let chain: Vec<_> = [2, 3].iter().map(|&k| FiniteQuotientSpec::uniform(4, k)).collect();
    let g = growth_experiment(&fx("cycle(4)"), 2, &chain).unwrap();
    for (row, k) in g.rows.iter().zip([2usize, 3]) {
        assert_eq!(row.betti[2], (k * k + 1).pow(2));
        assert_eq!(row.exact_match(), Some(true));
    }
    assert_eq!(g.reference[2], 1);
}

#[test]
fn growth_preconditions() {
    let l = fx("discrete(2)");
    let desc = [FiniteQuotientSpec::uniform(2, 3), FiniteQuotientSpec::uniform(2, 2)];
    assert!(growth_experiment(&l, 2, &desc).is_err());
    assert!(growth_experiment(&l, 4, &desc[..1]).is_err());
}

#[test]
fn growth_csv_has_exact_integers() {
    let chain = [FiniteQuotientSpec::uniform(2, 2)];
    let g = growth_experiment(&fx("discrete(2)"), 3, &chain).unwrap();
    let mut buf = Vec::new();
    g.write_csv(&mut buf).unwrap();
    let text = String::from_utf8(buf).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "modulus_vector,index,degree,betti,ratio_num,ratio_den,reference");
    assert_eq!(lines.next().unwrap(), "2;2,4,0,1,1,4,0");
    assert_eq!(lines.next().unwrap(), "2;2,4,1,5,5,4,1");
    assert!(!text.contains('.'));
}

#[test]
fn nonfamily_report_makes_no_claim() {
    let g = growth_experiment(&fx("path(4)"), 2, &[FiniteQuotientSpec::uniform(4, 2)]).unwrap();
    assert!(g.family.is_none());
    assert!(g.rows[0].exact_match().is_none());
    assert!(g.render_report().contains("no convergence claim"));
}

fn arb_spec(n: usize) -> impl Strategy<Value = FiniteQuotientSpec> {
    prop::collection::vec(1u64..=3, 1..=2).prop_flat_map(move |moduli| {
        let m = moduli.clone();
        prop::collection::vec(prop::collection::vec(0u64..3, m.len()), n)
            .prop_map(move |images| FiniteQuotientSpec { moduli: m.clone(), images })
    })
}

fn flag_with_spec() -> impl Strategy<Value = (SimplicialComplex, FiniteQuotientSpec)> {
    any::<u64>().prop_flat_map(|seed| {
        let l = random_flag_complex(seed, 6);
        let n = l.vertex_count();
        (Just(l), arb_spec(n))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn euler_characteristic_is_multiplicative((l, spec) in flag_with_spec()) {
        let cover = finite_cover(&l, &spec).unwrap();
        let base = salvetti_complex(&l).unwrap();
        prop_assert!(cover.chain_complex().check_boundary_squared().is_ok());
        prop_assert_eq!(cover.euler_characteristic(), cover.index() as i64 * base.euler_characteristic());
        let counts: Vec<usize> = base.cell_counts().iter().map(|c| c * cover.index() as usize).collect();
        prop_assert_eq!(cover.cell_counts(), counts);
    }

    #[test]
    fn alternating_sum_of_ratios((l, spec) in flag_with_spec()) {
        let g = growth_experiment(&l, 2, &[spec]).unwrap();
        let row = &g.rows[0];
        let alt: Ratio<i64> = row.ratios.iter().enumerate()
            .map(|(i, r)| if i % 2 == 0 { *r } else { -r }).sum();
        prop_assert_eq!(alt, Ratio::from_integer(1 - l.euler_characteristic()));
        prop_assert_eq!(g.reference_euler, 1 - l.euler_characteristic());
    }

    #[test]
    fn euler_identity_for_toral_model(seed in any::<u64>()) {
        let l = random_flag_complex(seed, 6);
        let x = euler_characteristic_xl(&l);
        prop_assert_eq!(x, 1 - l.euler_characteristic());
        prop_assert_eq!(x, salvetti_complex(&l).unwrap().euler_characteristic());
    }

    #[test]
    fn covers_factor_through_coarser_moduli(seed in any::<u64>(), k in 1u64..=3, m in 1u64..=2) {
        let l = random_flag_complex(seed, 5);
        let n = l.vertex_count();
        let fine = finite_cover(&l, &FiniteQuotientSpec::uniform(n, k * m)).unwrap();
        let coarse = finite_cover(&l, &FiniteQuotientSpec::uniform(n, k)).unwrap();
        prop_assert_eq!(fine.index() % coarse.index(), 0);
        let factor = (fine.index() / coarse.index()) as usize;
        let scaled: Vec<usize> = coarse.cell_counts().iter().map(|c| c * factor).collect();
        prop_assert_eq!(fine.cell_counts(), scaled);
    }
}

#[test]
fn cube_summary_serializes() {
    let c = finite_cover(&fx("discrete(2)"), &FiniteQuotientSpec::uniform(2, 2)).unwrap();
    let json = serde_json::to_value(c.summary()).unwrap();
    assert_eq!(json["index"], 4);
    assert_eq!(json["cell_counts"], serde_json::json!([4, 8]));
    assert_eq!(json["euler_characteristic"], -4);
}

#[test]
fn cover_of_nonflag_is_rejected() {
    assert!(finite_cover(&fx("rp2_6"), &FiniteQuotientSpec::trivial(6)).is_err());
    let _ = betti_fp(&simplicial_chain_complex(&fx("rp2_6"), true), 2).unwrap();
}
