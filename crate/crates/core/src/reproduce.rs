//! End-to-end runs of the AG_2(3,4) case study, compared against the
//! expected values stored in `data/expected.json`.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::codes::LinearCode;
use crate::designs::IncidenceStructure;
use crate::embedding::{
    embedding_search, parallel_union_codewords, sym_embedding_code, sym_embedding_search,
    thm5_necessary, thm_taf_necessary, EmbeddingSearchResult,
};
use crate::error::{Error, Result};
use crate::geometry::{ag_design, pg_design};
use crate::iso::{analyze, are_isomorphic, automorphism_group, canonical_cert};

const EXPECTED: &str = include_str!("../data/expected.json");

/// The stored expected values.
pub fn expected() -> Value {
    serde_json::from_str(EXPECTED).expect("bundled data is valid JSON")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    Table1,
    Table2,
    Section5,
    Section6,
}

impl Target {
    pub fn key(self) -> &'static str {
        match self {
            Target::Table1 => "table1",
            Target::Table2 => "table2",
            Target::Section5 => "section5",
            Target::Section6 => "section6",
        }
    }
}

/// One compared value.
#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub expected: Value,
    pub actual: Value,
}

impl Check {
    pub fn ok(&self) -> bool {
        self.expected == self.actual
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub target: Target,
    pub checks: Vec<Check>,
    /// CSV for the tables, empty for the sections.
    pub csv: String,
}

impl Report {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(Check::ok)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "target": self.target.key(),
            "ok": self.ok(),
            "checks": self.checks.iter().map(|c| json!({
                "name": c.name, "expected": c.expected, "actual": c.actual, "ok": c.ok(),
            })).collect::<Vec<_>>(),
        })
    }

    pub fn to_text(&self) -> String {
        let mut s = self.csv.clone();
        for c in &self.checks {
            let mark = if c.ok() { "ok" } else { "MISMATCH" };
            s.push_str(&format!(
                "{}: {} (expected {}) {mark}\n",
                c.name, c.actual, c.expected
            ));
        }
        s
    }
}

struct Checker {
    expected: Value,
    checks: Vec<Check>,
}

impl Checker {
    fn new(target: Target) -> Self {
        Checker {
            expected: expected()[target.key()].clone(),
            checks: Vec::new(),
        }
    }

    fn check(&mut self, name: &str, actual: impl Into<Value>) {
        let expected = self.expected.get(name).cloned().unwrap_or(Value::Null);
        self.checks.push(Check {
            name: name.to_string(),
            expected,
            actual: actual.into(),
        });
    }
}

/// The designs met along the way, from AG_2(3,4) through two searches.
#[derive(Clone, Debug)]
pub struct Lineage {
    pub ag: IncidenceStructure,
    pub first: EmbeddingSearchResult,
    /// The completion of the AG residual that is not isomorphic to AG.
    pub e1: IncidenceStructure,
    /// A good block of `e1` whose residual differs from that of AG.
    pub e1_block: usize,
    pub second: EmbeddingSearchResult,
    /// The completion of that residual isomorphic to neither AG nor `e1`.
    pub e2: IncidenceStructure,
}

fn new_class(
    res: &EmbeddingSearchResult,
    known: &[&IncidenceStructure],
) -> Result<IncidenceStructure> {
    let certs: Vec<String> = known.iter().map(|d| canonical_cert(d).digest).collect();
    res.iso_classes
        .iter()
        .find(|c| !certs.contains(&c.digest))
        .map(|c| c.representative.clone())
        .ok_or_else(|| Error::InfeasibleInstance("search found no new isomorphism class".into()))
}

/// Runs both searches. Takes a few seconds per search.
pub fn lineage() -> Result<Lineage> {
    let ag = ag_design(3, 4, 2)?.0;
    let first = embedding_search(&ag, 0, None)?;
    let e1 = new_class(&first, &[&ag])?;
    let ag_residual = ag.residual(0, false)?;
    let group = automorphism_group(&e1);
    let mut e1_block = None;
    for orbit in group.block_orbits() {
        let j = orbit[0];
        if e1.good_block(j)?.is_some() && !are_isomorphic(&e1.residual(j, false)?, &ag_residual) {
            e1_block = Some(j);
            break;
        }
    }
    let e1_block =
        e1_block.ok_or_else(|| Error::InfeasibleInstance("no second type of good block".into()))?;
    let second = embedding_search(&e1, e1_block, None)?;
    let e2 = new_class(&second, &[&ag, &e1])?;
    Ok(Lineage {
        ag,
        first,
        e1,
        e1_block,
        second,
        e2,
    })
}

fn orbit_sizes(orbits: &[Vec<usize>]) -> Vec<usize> {
    let mut s: Vec<usize> = orbits.iter().map(Vec::len).collect();
    s.sort_unstable();
    s
}

fn table(target: Target, d: &IncidenceStructure, block: usize) -> Result<Report> {
    let gb = d.good_block(block)?.ok_or(Error::NotGoodBlock(block))?;
    let code = LinearCode::from_rows(&gb.dprime.incidence_matrix(2)?);
    let wd = code.weight_distribution()?;
    let mut c = Checker::new(target);
    c.check("length", code.length());
    c.check("dim", code.dim());
    let listed: BTreeMap<String, u64> = c.expected["weights"]
        .as_object()
        .map(|m| {
            m.keys()
                .filter_map(|k| k.parse::<usize>().ok())
                .map(|w| (w.to_string(), wd.get(w)))
                .collect()
        })
        .unwrap_or_default();
    c.check("weights", json!(listed));
    let listed_total: u128 = listed.values().map(|&x| x as u128).sum();
    c.check("unlisted_sum", json!((wd.total() - listed_total) as u64));
    Ok(Report {
        target,
        checks: c.checks,
        csv: wd.to_csv(),
    })
}

fn section5(l: &Lineage) -> Result<Report> {
    let mut c = Checker::new(Target::Section5);
    let ag_group = automorphism_group(&l.ag);
    c.check("ag_aut_order", ag_group.order() as u64);
    c.check("ag_block_orbits", orbit_sizes(&ag_group.block_orbits()));

    let gb = l.ag.good_block(0)?.ok_or(Error::NotGoodBlock(0))?;
    c.check(
        "dprime_parallel_classes",
        gb.dprime.parallel_classes()?.len(),
    );
    let rs = gb.dprime.resolutions(None)?;
    c.check("dprime_resolutions", rs.len());
    let dg = automorphism_group(&gb.dprime);
    c.check("dprime_aut_order", dg.order() as u64);
    let orbits = dg.resolution_orbits(&rs);
    c.check("resolution_orbits", orbit_sizes(&orbits));
    let code = LinearCode::from_rows(&gb.dprime.incidence_matrix(2)?);
    let mut unions = BTreeMap::new();
    for o in &orbits {
        unions.insert(
            o.len().to_string(),
            parallel_union_codewords(&code, &rs[o[0]], 32)?.len(),
        );
    }
    c.check("parallel_unions", json!(unions));
    c.check("thm5_required", thm5_necessary(&l.ag, 0)?.required);

    c.check("candidates", l.first.candidates_examined);
    c.check("viable_codes", l.first.viable_codes);
    let classes: BTreeMap<String, usize> = l
        .first
        .iso_classes
        .iter()
        .map(|k| (k.aut_order.to_string(), k.multiplicity))
        .collect();
    c.check("classes", json!(classes));
    let (_, g1) = analyze(&l.e1);
    c.check("e1_aut_order", g1.order() as u64);
    c.check("e1_block_orbits", orbit_sizes(&g1.block_orbits()));
    let (_, g2) = analyze(&l.e2);
    c.check("e2_aut_order", g2.order() as u64);
    c.check("e2_block_orbits", orbit_sizes(&g2.block_orbits()));
    c.check("e2_rank", l.e2.incidence_matrix(2)?.rank());
    Ok(Report {
        target: Target::Section5,
        checks: c.checks,
        csv: String::new(),
    })
}

fn section6(l: &Lineage) -> Result<Report> {
    let mut c = Checker::new(Target::Section6);
    let code = sym_embedding_code(&l.ag, 2)?;
    c.check("sym_code", json!([code.length(), code.dim()]));
    let ag = sym_embedding_search(&l.ag, 2)?;
    c.check("ag_weight21", ag.weight_k_codewords);
    let pg = pg_design(3, 4, 2)?;
    c.check("ag_sym_designs", ag.designs.len());
    c.check(
        "ag_sym_is_pg",
        ag.designs.iter().all(|d| are_isomorphic(d, &pg)),
    );
    c.check(
        "e1_weight21",
        sym_embedding_search(&l.e1, 2)?.weight_k_codewords,
    );
    c.check(
        "e2_weight21",
        sym_embedding_search(&l.e2, 2)?.weight_k_codewords,
    );
    let taf = thm_taf_necessary(&l.ag, 2)?;
    c.check("taf_required", taf.required);
    c.check("ag_taf_found", taf.found);
    c.check("e1_taf_found", thm_taf_necessary(&l.e1, 2)?.found);
    c.check("e2_taf_found", thm_taf_necessary(&l.e2, 2)?.found);
    Ok(Report {
        target: Target::Section6,
        checks: c.checks,
        csv: String::new(),
    })
}

pub fn reproduce(target: Target) -> Result<Report> {
    match target {
        Target::Table1 => table(target, &ag_design(3, 4, 2)?.0, 0),
        Target::Table2 => {
            let l = lineage()?;
            table(target, &l.e1, l.e1_block)
        }
        Target::Section5 => section5(&lineage()?),
        Target::Section6 => section6(&lineage()?),
    }
}
