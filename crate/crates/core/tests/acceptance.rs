//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any failure.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::sync::OnceLock;
use std::time::Instant;

use embedrank::codes::{inner_product_bent, rm_code, rudolph_bound, sdp_code, LinearCode};
use embedrank::embedding::{
    embeddability, parallel_union_codewords, sym_embedding_code, sym_embedding_search,
    thm1_certify, thm_taf_necessary, EmbeddingSearchResult,
};
use embedrank::geometry::{ag_design, pg_design};
use embedrank::iso::{are_isomorphic, automorphism_group};
use embedrank::reproduce::{lineage, Lineage};
use embedrank::IncidenceStructure;

type Outcome = Result<(), String>;

macro_rules! expect_eq {
    ($got:expr, $want:expr, $what:expr) => {{
        let (g, w) = ($got, $want);
        if g != w {
            return Err(format!("{}: got {:?}, expected {:?}", $what, g, w));
        }
    }};
}

fn sorted_sizes(orbits: &[Vec<usize>]) -> Vec<usize> {
    let mut s: Vec<usize> = orbits.iter().map(Vec::len).collect();
    s.sort_unstable();
    s
}

fn ag234() -> IncidenceStructure {
    ag_design(3, 4, 2).unwrap().0
}

fn ranks() -> Outcome {
    let ag = ag234();
    let pg = pg_design(3, 4, 2).map_err(|e| e.to_string())?;
    expect_eq!(
        ag.incidence_matrix(2).unwrap().rank(),
        16,
        "2-rank of AG_2(3,4)"
    );
    expect_eq!(
        pg.incidence_matrix(2).unwrap().rank(),
        17,
        "2-rank of PG_2(3,4)"
    );
    expect_eq!(
        ag.residual(0, false)
            .unwrap()
            .incidence_matrix(2)
            .unwrap()
            .rank(),
        15,
        "2-rank of a residual"
    );
    for (name, d) in [("AG", &ag), ("PG", &pg)] {
        for j in 0..d.b() {
            let r = embeddability(d, j, 2).map_err(|e| e.to_string())?;
            if r.rank_full < r.rank_residual + 1 || !r.embeddable {
                return Err(format!(
                    "{name} block {j}: {} vs {}",
                    r.rank_full, r.rank_residual
                ));
            }
        }
    }
    Ok(())
}

fn distribution_matches(code: &LinearCode, listed: &[(usize, u64)], dim: usize) -> Outcome {
    expect_eq!((code.length(), code.dim()), (80, dim), "code parameters");
    let wd = code.weight_distribution().map_err(|e| e.to_string())?;
    for &(w, a) in listed {
        expect_eq!(wd.get(w), a, format!("A_{w}"));
    }
    expect_eq!(wd.total(), 1u128 << dim, "total");
    Ok(())
}

fn table1() -> Outcome {
    let gb = ag234().good_block(0).unwrap().ok_or("block 0 not good")?;
    let code = LinearCode::from_rows(&gb.dprime.incidence_matrix(2).unwrap());
    let listed = [
        (20, 48),
        (30, 768),
        (32, 610),
        (34, 1280),
        (36, 6240),
        (38, 7680),
        (40, 2880),
        (48, 600),
        (50, 256),
        (52, 240),
        (64, 5),
    ];
    distribution_matches(&code, &listed, 15)?;
    let wd = code.weight_distribution().unwrap();
    expect_eq!(
        wd.get(42) + wd.get(44) + wd.get(46),
        12160,
        "A_42 + A_44 + A_46"
    );
    Ok(())
}

fn table2(l: &Lineage) -> Outcome {
    let gb =
        l.e1.good_block(l.e1_block)
            .unwrap()
            .ok_or("second-type block not good")?;
    let code = LinearCode::from_rows(&gb.dprime.incidence_matrix(2).unwrap());
    let listed = [
        (20, 48),
        (30, 1024),
        (32, 610),
        (36, 6240),
        (38, 10240),
        (40, 2880),
        (44, 5760),
        (46, 5120),
        (48, 600),
        (52, 240),
        (64, 5),
    ];
    distribution_matches(&code, &listed, 15)?;
    let listed_sum: u64 = listed.iter().map(|(_, a)| a).sum();
    expect_eq!(listed_sum + 1, 1 << 15, "listed entries plus the zero word");
    Ok(())
}

fn dprime_structure() -> Outcome {
    let gb = ag234().good_block(0).unwrap().ok_or("block 0 not good")?;
    expect_eq!(
        gb.dprime.parallel_classes().unwrap().len(),
        40,
        "parallel classes"
    );
    let rs = gb.dprime.resolutions(None).unwrap();
    expect_eq!(rs.len(), 32, "resolutions");
    let g = automorphism_group(&gb.dprime);
    expect_eq!(g.order(), 552960, "|Aut|");
    expect_eq!(
        sorted_sizes(&g.resolution_orbits(&rs)),
        vec![2, 10, 20],
        "resolution orbits"
    );
    Ok(())
}

fn parallel_unions(l: &Lineage) -> Outcome {
    let gb = l.ag.good_block(0).unwrap().ok_or("block 0 not good")?;
    let rs = gb.dprime.resolutions(None).unwrap();
    let code = LinearCode::from_rows(&gb.dprime.incidence_matrix(2).unwrap());
    let mut counts = BTreeMap::new();
    for o in automorphism_group(&gb.dprime).resolution_orbits(&rs) {
        counts.insert(
            o.len(),
            parallel_union_codewords(&code, &rs[o[0]], 32)
                .unwrap()
                .len(),
        );
    }
    expect_eq!(
        counts,
        BTreeMap::from([(2, 130), (10, 34), (20, 10)]),
        "weight-32 unions by orbit"
    );
    let found: Vec<u64> = [&l.ag, &l.e1, &l.e2]
        .iter()
        .map(|d| thm_taf_necessary(d, 2).unwrap().found)
        .collect();
    expect_eq!(found, vec![210, 130, 130], "row-code unions for AG, E1, E2");
    Ok(())
}

fn orders(res: &EmbeddingSearchResult) -> BTreeMap<u128, usize> {
    res.iso_classes
        .iter()
        .map(|c| (c.aut_order, c.multiplicity))
        .collect()
}

fn first_search(l: &Lineage) -> Outcome {
    let res = &l.first;
    expect_eq!(res.candidates_examined, 3876, "candidates");
    expect_eq!(res.viable_codes, 16, "viable codes");
    for e in res.designs() {
        let p = e.verify_tdesign(2).ok_or("not a 2-design")?;
        expect_eq!((p.v, p.k, p.lambda), (64, 16, 5), "parameters");
        if e.is_affine_resolvable().is_none() {
            return Err("completion not affine resolvable".into());
        }
    }
    expect_eq!(
        orders(res),
        BTreeMap::from([(92160, 12), (23224320, 4)]),
        "classes by group order"
    );
    let ag_class = res
        .iso_classes
        .iter()
        .find(|c| c.multiplicity == 4)
        .ok_or("no class of size 4")?;
    if !are_isomorphic(&ag_class.representative, &l.ag) {
        return Err("size-4 class is not AG_2(3,4)".into());
    }
    expect_eq!(
        sorted_sizes(&automorphism_group(&l.e1).block_orbits()),
        vec![1, 3, 80],
        "E1 block orbits"
    );
    Ok(())
}

fn later_searches(l: &Lineage) -> Outcome {
    let g2 = automorphism_group(&l.e2);
    expect_eq!(g2.order(), 368640, "|Aut(E2)|");
    expect_eq!(
        sorted_sizes(&g2.block_orbits()),
        vec![4, 80],
        "E2 block orbits"
    );
    expect_eq!(l.e2.incidence_matrix(2).unwrap().rank(), 16, "2-rank of E2");
    let second: Vec<u128> = orders(&l.second).into_keys().collect();
    expect_eq!(second, vec![92160, 368640], "second stage classes");
    let good = g2
        .block_orbits()
        .into_iter()
        .find(|o| o.len() == 4)
        .ok_or("no orbit of size 4")?[0];
    let third =
        embedrank::embedding::embedding_search(&l.e2, good, None).map_err(|e| e.to_string())?;
    let third: Vec<u128> = orders(&third).into_keys().collect();
    expect_eq!(third, vec![92160, 368640], "third stage classes");
    Ok(())
}

fn symmetric(l: &Lineage) -> Outcome {
    for (name, d) in [("E1", &l.e1), ("E2", &l.e2)] {
        let code = sym_embedding_code(d, 2).map_err(|e| e.to_string())?;
        expect_eq!(
            (code.length(), code.dim()),
            (85, 17),
            format!("{name} code")
        );
        let res = sym_embedding_search(d, 2).map_err(|e| e.to_string())?;
        expect_eq!(
            res.weight_k_codewords,
            69,
            format!("{name} weight-21 words")
        );
        if !res.designs.is_empty() {
            return Err(format!("{name} assembled a symmetric design"));
        }
    }
    let res = sym_embedding_search(&l.ag, 2).map_err(|e| e.to_string())?;
    expect_eq!(res.designs.len(), 1, "symmetric completions of AG");
    if !are_isomorphic(&res.designs[0], &pg_design(3, 4, 2).unwrap()) {
        return Err("completion is not PG_2(3,4)".into());
    }
    Ok(())
}

fn collineations() -> Outcome {
    let g = automorphism_group(&ag234());
    expect_eq!(g.order(), 23224320, "|Aut(AG_2(3,4))|");
    expect_eq!(g.block_orbits().len(), 1, "block orbits");
    Ok(())
}

fn theory() -> Outcome {
    let mut designs: Vec<(String, IncidenceStructure, u32)> = Vec::new();
    for (n, q, d, p) in [
        (2, 2, 1, 2),
        (2, 3, 1, 3),
        (2, 4, 1, 2),
        (3, 2, 2, 2),
        (3, 3, 2, 3),
        (3, 4, 2, 2),
    ] {
        designs.push((format!("AG_{d}({n},{q})"), ag_design(n, q, d).unwrap().0, p));
    }
    for (n, q, d, p) in [
        (2, 2, 1, 2),
        (2, 3, 1, 3),
        (2, 4, 1, 2),
        (3, 2, 2, 2),
        (3, 3, 2, 3),
        (3, 4, 2, 2),
    ] {
        designs.push((format!("PG_{d}({n},{q})"), pg_design(n, q, d).unwrap(), p));
    }
    let sdp = sdp_code(&inner_product_bent(2))
        .unwrap()
        .min_weight_design()
        .unwrap();
    designs.push(("SDP".into(), sdp.clone(), 2));
    designs.push((
        "RM(1,4)".into(),
        rm_code(1, 4).unwrap().min_weight_design().unwrap(),
        2,
    ));
    for (name, d, p) in &designs {
        for e in thm1_certify(d, *p).map_err(|e| e.to_string())? {
            if e.certified && !e.embeddable {
                return Err(format!(
                    "{name}: block {} certified but not embeddable",
                    e.block
                ));
            }
        }
        let code = LinearCode::from_cols(&d.incidence_matrix(*p).unwrap());
        let dmin = code.min_weight().unwrap().ok_or("zero code")?;
        for y in code.codewords_of_weight(dmin).unwrap().iter().take(10) {
            expect_eq!(
                code.hill_newton(y).unwrap().drop,
                1,
                format!("{name} dimension drop")
            );
        }
    }
    expect_eq!(sdp.incidence_matrix(2).unwrap().rank(), 6, "SDP 2-rank");
    expect_eq!(
        sdp.residual(0, false)
            .unwrap()
            .incidence_matrix(2)
            .unwrap()
            .rank(),
        5,
        "SDP residual 2-rank"
    );
    for q in [4u64, 5, 7, 8, 9] {
        for n in 3..=5u32 {
            let e = rudolph_bound((q.pow(n - 1) - 1) / (q - 1), (q.pow(n - 2) - 1) / (q - 1));
            if e < 2 {
                return Err(format!("q={q} n={n}: e={e}"));
            }
        }
    }
    for n in 3..=6u32 {
        expect_eq!(
            rudolph_bound(2u64.pow(n - 1) - 1, 2u64.pow(n - 2) - 1),
            1,
            format!("q=2 n={n}")
        );
    }
    Ok(())
}

fn ag344() -> Outcome {
    let d = ag_design(4, 4, 3).map_err(|e| e.to_string())?.0;
    expect_eq!(
        d.incidence_matrix(2).unwrap().rank(),
        25,
        "2-rank of AG_3(4,4)"
    );
    let gb = d.good_block(0).unwrap().ok_or("block 0 not good")?;
    expect_eq!(
        gb.dprime.parallel_classes().unwrap().len(),
        168,
        "parallel classes"
    );
    let code = LinearCode::from_rows(&gb.dprime.incidence_matrix(2).unwrap());
    expect_eq!((code.length(), code.dim()), (336, 24), "code parameters");
    expect_eq!(
        code.codewords_of_weight(128).unwrap().len(),
        10290,
        "weight-128 words"
    );
    expect_eq!(
        parallel_union_codewords(&code, &gb.resolution, 128)
            .unwrap()
            .len(),
        2226,
        "unions"
    );
    Ok(())
}

fn main() -> ExitCode {
    let mut failed = 0;
    let mut report = |n: usize, what: &str, f: &dyn Fn() -> Outcome| {
        let t = Instant::now();
        let r = std::panic::catch_unwind(std::panic::AssertUnwindSafe(f))
            .unwrap_or_else(|_| Err("panicked".into()));
        let secs = t.elapsed().as_secs_f64();
        match r {
            Ok(()) => println!("PASS {n:>2} {what} ({secs:.1}s)"),
            Err(e) => {
                failed += 1;
                println!("FAIL {n:>2} {what} ({secs:.1}s): {e}");
            }
        }
    };
    let lineage_cell: OnceLock<Result<Lineage, String>> = OnceLock::new();
    let with_lineage = |f: fn(&Lineage) -> Outcome| {
        let cell = &lineage_cell;
        move || match cell.get_or_init(|| lineage().map_err(|e| e.to_string())) {
            Ok(l) => f(l),
            Err(e) => Err(format!("searches failed: {e}")),
        }
    };
    report(1, "p-ranks and the rank gap", &ranks);
    report(
        2,
        "weight distribution of the AG residual block code",
        &table1,
    );
    report(
        3,
        "weight distribution at the second type of good block",
        &with_lineage(table2),
    );
    report(
        4,
        "parallel classes, resolutions and group of the residual blocks",
        &dprime_structure,
    );
    report(
        5,
        "parallel-union codeword counts",
        &with_lineage(parallel_unions),
    );
    report(
        6,
        "completion search from AG_2(3,4)",
        &with_lineage(first_search),
    );
    report(
        7,
        "second and third completion searches",
        &with_lineage(later_searches),
    );
    report(8, "symmetric embeddings", &with_lineage(symmetric));
    report(9, "collineation group of AG_2(3,4)", &collineations);
    report(10, "theory checks across geometric designs", &theory);
    report(11, "AG_3(4,4) codeword counts", &ag344);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
