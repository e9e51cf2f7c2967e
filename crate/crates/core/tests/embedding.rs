use std::collections::BTreeMap;
use std::sync::OnceLock;

use embedrank::codes::LinearCode;
use embedrank::embedding::{
    embeddability, embedding_search, parallel_union_codewords, sym_embedding_code,
    sym_embedding_search, thm5_necessary, thm5_necessary_with, thm_taf_necessary,
    EmbeddingSearchResult, ResidualInstance,
};
use embedrank::geometry::{ag_design, pg_design};
use embedrank::iso::{are_isomorphic, automorphism_group, canonical_cert};
use embedrank::{IncidenceStructure, Resolution};

struct Stages {
    ag: IncidenceStructure,
    first: EmbeddingSearchResult,
    e1: IncidenceStructure,
    e2: IncidenceStructure,
}

fn class_with_order(res: &EmbeddingSearchResult, order: u128) -> IncidenceStructure {
    res.iso_classes
        .iter()
        .find(|c| c.aut_order == order)
        .expect("class present")
        .representative
        .clone()
}

/// First block of each block orbit, keyed by orbit size.
fn orbit_reps(d: &IncidenceStructure) -> BTreeMap<usize, usize> {
    automorphism_group(d)
        .block_orbits()
        .iter()
        .map(|o| (o.len(), o[0]))
        .collect()
}

fn stages() -> &'static Stages {
    static S: OnceLock<Stages> = OnceLock::new();
    S.get_or_init(|| {
        let ag = ag_design(3, 4, 2).unwrap().0;
        let first = embedding_search(&ag, 0, None).unwrap();
        let e1 = class_with_order(&first, 92160);
        let second = embedding_search(&e1, orbit_reps(&e1)[&3], None).unwrap();
        let e2 = class_with_order(&second, 368640);
        Stages { ag, first, e1, e2 }
    })
}

fn orders(res: &EmbeddingSearchResult) -> BTreeMap<u128, usize> {
    res.iso_classes
        .iter()
        .map(|c| (c.aut_order, c.multiplicity))
        .collect()
}

#[test]
fn first_stage_from_ag234() {
    let s = stages();
    let res = &s.first;
    assert_eq!(res.candidates_examined, 3876);
    assert_eq!(res.viable_codes, 16);
    for o in &res.outcomes {
        assert_eq!(o.code_dim, 16);
        assert_eq!(o.designs.len(), 1);
    }
    for e in res.designs() {
        let p = e.verify_tdesign(2).unwrap();
        assert_eq!((p.v, p.k, p.lambda), (64, 16, 5));
        assert!(e.is_affine_resolvable().is_some());
        assert_eq!(e.incidence_matrix(2).unwrap().rank(), 16);
    }
    let total: usize = res.iso_classes.iter().map(|c| c.multiplicity).sum();
    assert_eq!(total, res.designs().count());
    assert_eq!(orders(res), BTreeMap::from([(92160, 12), (23224320, 4)]));
    assert!(are_isomorphic(&class_with_order(res, 23224320), &s.ag));
    assert!(!are_isomorphic(&s.e1, &s.ag));
}

#[test]
fn e1_and_e2_block_orbits() {
    let s = stages();
    let sizes = |d: &IncidenceStructure| orbit_reps(d).keys().copied().collect::<Vec<_>>();
    assert_eq!(sizes(&s.e1), vec![1, 3, 80]);
    assert_eq!(sizes(&s.e2), vec![4, 80]);
    assert_eq!(s.e2.incidence_matrix(2).unwrap().rank(), 16);
    assert!(!are_isomorphic(&s.e1, &s.e2));
    // the long orbits hold no good blocks
    assert!(s.e1.good_block(orbit_reps(&s.e1)[&80]).unwrap().is_none());
    assert!(s.e2.good_block(orbit_reps(&s.e2)[&80]).unwrap().is_none());
}

#[test]
fn e1_fixed_block_embeds_in_ag_and_e1() {
    let s = stages();
    let res = embedding_search(&s.e1, orbit_reps(&s.e1)[&1], None).unwrap();
    let got: Vec<u128> = orders(&res).into_keys().collect();
    assert_eq!(got, vec![92160, 23224320]);
}

#[test]
fn e1_orbit3_block_embeds_in_e1_and_e2() {
    let s = stages();
    let res = embedding_search(&s.e1, orbit_reps(&s.e1)[&3], None).unwrap();
    let got: Vec<u128> = orders(&res).into_keys().collect();
    assert_eq!(got, vec![92160, 368640]);
}

#[test]
fn e2_good_block_embeds_in_e1_and_e2() {
    let s = stages();
    let res = embedding_search(&s.e2, orbit_reps(&s.e2)[&4], None).unwrap();
    let got: Vec<u128> = orders(&res).into_keys().collect();
    assert_eq!(got, vec![92160, 368640]);
    let digests: Vec<&str> = res.iso_classes.iter().map(|c| c.digest.as_str()).collect();
    assert!(digests.contains(&canonical_cert(&s.e1).digest.as_str()));
}

#[test]
fn parallel_unions_per_resolution_orbit() {
    let ag = ag_design(3, 4, 2).unwrap().0;
    let gb = ag.good_block(0).unwrap().unwrap();
    let rs = gb.dprime.resolutions(None).unwrap();
    let code = LinearCode::from_rows(&gb.dprime.incidence_matrix(2).unwrap());
    let orbits = automorphism_group(&gb.dprime).resolution_orbits(&rs);
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for o in &orbits {
        let c = parallel_union_codewords(&code, &rs[o[0]], 32)
            .unwrap()
            .len();
        // constant on each orbit
        assert_eq!(
            parallel_union_codewords(&code, &rs[*o.last().unwrap()], 32)
                .unwrap()
                .len(),
            c
        );
        counts.insert(o.len(), c);
    }
    assert_eq!(counts, BTreeMap::from([(2, 130), (10, 34), (20, 10)]));

    let check = thm5_necessary(&ag, 0).unwrap();
    assert_eq!(
        (check.required, check.found, check.passes),
        (120, 130, true)
    );
    let r10 = orbits.iter().find(|o| o.len() == 10).unwrap()[0];
    let check = thm5_necessary_with(&ag, 0, Some(&rs[r10])).unwrap();
    assert_eq!((check.found, check.passes), (34, false));
}

#[test]
fn normal_block_condition() {
    let s = stages();
    let ag = thm_taf_necessary(&s.ag, 2).unwrap();
    assert_eq!((ag.required, ag.found, ag.passes), (210, 210, true));
    for e in [&s.e1, &s.e2] {
        let c = thm_taf_necessary(e, 2).unwrap();
        assert_eq!((c.found, c.passes), (130, false));
    }
}

#[test]
fn symmetric_embeddings() {
    let s = stages();
    let code = sym_embedding_code(&s.ag, 2).unwrap();
    assert_eq!((code.length(), code.dim()), (85, 17));
    let res = sym_embedding_search(&s.ag, 2).unwrap();
    assert_eq!(res.weight_k_codewords, 85);
    assert_eq!(res.designs.len(), 1);
    assert!(are_isomorphic(
        &res.designs[0],
        &pg_design(3, 4, 2).unwrap()
    ));
    for e in [&s.e1, &s.e2] {
        let code = sym_embedding_code(e, 2).unwrap();
        assert_eq!(code.dim(), e.incidence_matrix(2).unwrap().rank() + 1);
        let res = sym_embedding_search(e, 2).unwrap();
        assert_eq!(res.weight_k_codewords, 69);
        assert!(res.ruled_out());
        assert!(res.designs.is_empty());
    }
}

#[test]
fn a1_row_differences() {
    // rows of the 16 new points of AG_2(3,4) over the extended residual columns
    let ag = ag_design(3, 4, 2).unwrap().0;
    let inst = ResidualInstance::new(&ag, 0, None).unwrap();
    let gb = &inst.good;
    let block = &ag.blocks()[0];
    let rows: Vec<Vec<u8>> = block
        .iter()
        .map(|&x| {
            gb.dprime_blocks
                .iter()
                .map(|&j| ag.blocks()[j].contains(&x) as u8)
                .collect()
        })
        .collect();
    let code = LinearCode::from_rows(&gb.dprime.incidence_matrix(2).unwrap());
    let class_of = inst.resolution.class_of();
    let mut seen = std::collections::HashSet::new();
    for a in 0..16 {
        for b in a + 1..16 {
            let diff: Vec<u8> = rows[a].iter().zip(&rows[b]).map(|(x, y)| x ^ y).collect();
            assert_eq!(diff.iter().filter(|&&x| x == 1).count(), 32);
            assert!(code.contains(&diff).unwrap());
            let classes: std::collections::BTreeSet<usize> = (0..80)
                .filter(|&j| diff[j] == 1)
                .map(|j| class_of[j])
                .collect();
            assert_eq!(classes.len(), 8);
            let union: usize = classes
                .iter()
                .map(|&c| inst.resolution.classes()[c].len())
                .sum();
            assert_eq!(union, 32);
            seen.insert(diff);
        }
    }
    assert_eq!(seen.len(), 120);
}

#[test]
fn dual_of_block_rows_has_distance_at_least_five() {
    // dependencies among the 16 point rows of one block, restricted to the residual blocks
    let ag = ag_design(3, 4, 2).unwrap().0;
    let gb = ag.good_block(0).unwrap().unwrap();
    let rows: Vec<Vec<u8>> = ag.blocks()[0]
        .iter()
        .map(|&x| {
            gb.dprime_blocks
                .iter()
                .map(|&j| ag.blocks()[j].contains(&x) as u8)
                .collect()
        })
        .collect();
    let m = embedrank::algebra::MatGFp::from_rows(2, 80, &rows).unwrap();
    let dual = LinearCode::from_rows(&m.transpose().nullspace());
    assert_eq!(dual.length(), 16);
    let d = dual.min_weight().unwrap();
    assert!(d.is_none_or(|w| w >= 5), "{d:?}");
}

#[test]
fn explicit_resolution_is_validated() {
    let ag = ag_design(3, 4, 2).unwrap().0;
    let bogus = Resolution::new(
        &ag,
        ag.is_affine_resolvable()
            .unwrap()
            .resolution
            .classes()
            .to_vec(),
    )
    .unwrap();
    assert!(embedding_search(&ag, 0, Some(&bogus)).is_err());
}

#[test]
fn binary_hyperplane_residuals_embed() {
    for n in 2..=4usize {
        let pg = pg_design(n, 2, n - 1).unwrap();
        let ag = ag_design(n, 2, n - 1).unwrap().0;
        for j in 0..pg.b() {
            assert!(
                are_isomorphic(&pg.residual(j, false).unwrap(), &ag),
                "n={n} block {j}"
            );
            assert!(
                embeddability(&pg, j, 2).unwrap().embeddable,
                "n={n} block {j}"
            );
        }
    }
}
