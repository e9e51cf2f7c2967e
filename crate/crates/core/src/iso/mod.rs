//! Isomorphism testing, canonical certificates, automorphism groups and orbits.
//!
//! A structure is turned into its bipartite point/block graph with repeated
//! blocks collapsed to one vertex colored by multiplicity. The canonical form
//! is the best leaf of an individualization–refinement search; the
//! automorphisms met along the way generate the full group.

mod canon;
mod group;

use std::collections::HashMap;

use sha2::{Digest, Sha256};

use crate::designs::{IncidenceStructure, Resolution};
use canon::{canonize, Canon, Graph};

/// Canonical form of an incidence structure.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CanonicalCert {
    /// Lowercase SHA-256 hex digest of `des`.
    pub digest: String,
    /// The structure relabeled canonically, in `.des` format.
    pub des: String,
}

/// Automorphism group acting on points `0..v` and blocks `v..v+b`.
#[derive(Clone, Debug)]
pub struct PermGroup {
    v: usize,
    b: usize,
    generators: Vec<Vec<usize>>,
    order: u128,
}

struct Collapsed {
    graph: Graph,
    /// Original block indices of each distinct block, in order.
    copies: Vec<Vec<usize>>,
}

fn collapse(d: &IncidenceStructure) -> Collapsed {
    let v = d.v();
    let mut index: HashMap<&[usize], usize> = HashMap::new();
    let mut copies: Vec<Vec<usize>> = Vec::new();
    let mut distinct: Vec<&[usize]> = Vec::new();
    for (j, b) in d.blocks().iter().enumerate() {
        let k = *index.entry(b.as_slice()).or_insert_with(|| {
            distinct.push(b);
            copies.push(Vec::new());
            distinct.len() - 1
        });
        copies[k].push(j);
    }
    let n = v + distinct.len();
    let mut adj = vec![Vec::new(); n];
    let mut color = vec![0u64; n];
    let mut mult = vec![1u32; n];
    for (k, b) in distinct.iter().enumerate() {
        let x = v + k;
        for &p in b.iter() {
            adj[x].push(p);
            adj[p].push(x);
        }
        mult[x] = copies[k].len() as u32;
        color[x] = 1 << 63 | (mult[x] as u64) << 32 | b.len() as u64;
    }
    Collapsed {
        graph: Graph {
            n,
            nv: v,
            adj,
            color,
            mult,
        },
        copies,
    }
}

fn canonical(d: &IncidenceStructure) -> (Collapsed, Canon) {
    let c = collapse(d);
    let canon = canonize(&c.graph);
    (c, canon)
}

fn cert_from(d: &IncidenceStructure, c: &Collapsed, canon: &Canon) -> CanonicalCert {
    let v = d.v();
    let mut label = vec![0usize; v];
    for (i, &x) in canon.lab[..v].iter().enumerate() {
        label[x] = i;
    }
    let mut blocks = Vec::with_capacity(d.b());
    for &x in &canon.lab[v..] {
        let k = x - v;
        let mut b: Vec<usize> = c.graph.adj[x].iter().map(|&p| label[p]).collect();
        b.sort_unstable();
        for _ in 0..c.copies[k].len() {
            blocks.push(b.clone());
        }
    }
    let des = IncidenceStructure::new(v, blocks)
        .expect("relabeling keeps blocks valid")
        .to_des();
    let digest = hex::encode(Sha256::digest(des.as_bytes()));
    CanonicalCert { digest, des }
}

/// Canonical certificate: equal for two structures exactly when they are isomorphic.
pub fn canonical_cert(d: &IncidenceStructure) -> CanonicalCert {
    let (c, canon) = canonical(d);
    cert_from(d, &c, &canon)
}

pub fn are_isomorphic(a: &IncidenceStructure, b: &IncidenceStructure) -> bool {
    a.v() == b.v() && a.b() == b.b() && canonical_cert(a) == canonical_cert(b)
}

/// Lifts automorphisms of the collapsed graph to points and original blocks,
/// and adds generators permuting the copies of each repeated block.
fn lift(d: &IncidenceStructure, c: &Collapsed, gens: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let (v, b) = (d.v(), d.b());
    let mut out = Vec::new();
    for g in gens {
        let mut p: Vec<usize> = (0..v + b).collect();
        p[..v].copy_from_slice(&g[..v]);
        for (k, cp) in c.copies.iter().enumerate() {
            let target = &c.copies[g[v + k] - v];
            for (i, &j) in cp.iter().enumerate() {
                p[v + j] = v + target[i];
            }
        }
        out.push(p);
    }
    for cp in c.copies.iter().filter(|cp| cp.len() > 1) {
        let mut t: Vec<usize> = (0..v + b).collect();
        t.swap(v + cp[0], v + cp[1]);
        out.push(t);
        if cp.len() > 2 {
            let mut cyc: Vec<usize> = (0..v + b).collect();
            for (i, &j) in cp.iter().enumerate() {
                cyc[v + j] = v + cp[(i + 1) % cp.len()];
            }
            out.push(cyc);
        }
    }
    out
}

pub fn automorphism_group(d: &IncidenceStructure) -> PermGroup {
    let (c, canon) = canonical(d);
    let generators = lift(d, &c, &canon.generators);
    let order = group::Chain::new(d.v() + d.b(), &generators).order();
    PermGroup {
        v: d.v(),
        b: d.b(),
        generators,
        order,
    }
}

/// Certificate and automorphism group from a single search.
pub fn analyze(d: &IncidenceStructure) -> (CanonicalCert, PermGroup) {
    let (c, canon) = canonical(d);
    let cert = cert_from(d, &c, &canon);
    let generators = lift(d, &c, &canon.generators);
    let order = group::Chain::new(d.v() + d.b(), &generators).order();
    (
        cert,
        PermGroup {
            v: d.v(),
            b: d.b(),
            generators,
            order,
        },
    )
}

impl PermGroup {
    pub fn order(&self) -> u128 {
        self.order
    }

    /// `v + b`.
    pub fn degree(&self) -> usize {
        self.v + self.b
    }

    /// Generators on `0..v+b`; block `j` is element `v + j`.
    pub fn generators(&self) -> &[Vec<usize>] {
        &self.generators
    }

    pub fn point_orbits(&self) -> Vec<Vec<usize>> {
        let gens: Vec<Vec<usize>> = self
            .generators
            .iter()
            .map(|g| g[..self.v].to_vec())
            .collect();
        group::orbits(self.v, &gens)
    }

    pub fn block_orbits(&self) -> Vec<Vec<usize>> {
        let gens: Vec<Vec<usize>> = self
            .generators
            .iter()
            .map(|g| g[self.v..].iter().map(|&x| x - self.v).collect())
            .collect();
        group::orbits(self.b, &gens)
    }

    /// Orbits on a list of resolutions, by indices into `list`. Each generator
    /// maps every class setwise; images outside the list are ignored.
    pub fn resolution_orbits(&self, list: &[Resolution]) -> Vec<Vec<usize>> {
        let index: HashMap<Vec<Vec<usize>>, usize> = list
            .iter()
            .enumerate()
            .map(|(i, r)| (r.normalized(), i))
            .collect();
        let gens: Vec<Vec<usize>> = self
            .generators
            .iter()
            .map(|g| {
                list.iter()
                    .enumerate()
                    .map(|(i, r)| {
                        let mut img: Vec<Vec<usize>> = r
                            .classes()
                            .iter()
                            .map(|c| {
                                let mut m: Vec<usize> =
                                    c.iter().map(|&j| g[self.v + j] - self.v).collect();
                                m.sort_unstable();
                                m
                            })
                            .collect();
                        img.sort();
                        index.get(&img).copied().unwrap_or(i)
                    })
                    .collect()
            })
            .collect();
        group::orbits(list.len(), &gens)
    }

    /// Checks that every generator maps blocks of `d` onto blocks of `d`.
    pub fn verify(&self, d: &IncidenceStructure) -> bool {
        self.generators.iter().all(|g| {
            d.blocks().iter().enumerate().all(|(j, b)| {
                let mut img: Vec<usize> = b.iter().map(|&x| g[x]).collect();
                img.sort_unstable();
                let k = g[self.v + j];
                k >= self.v && d.blocks()[k - self.v] == img
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{ag_design, pg_design};
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    fn shuffle(d: &IncidenceStructure, seed: u64) -> IncidenceStructure {
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        let mut perm: Vec<usize> = (0..d.v()).collect();
        perm.shuffle(&mut rng);
        let mut order: Vec<usize> = (0..d.b()).collect();
        order.shuffle(&mut rng);
        d.relabel_points(&perm)
            .unwrap()
            .reorder_blocks(&order)
            .unwrap()
    }

    #[test]
    fn fano_group_and_invariance() {
        let d = pg_design(2, 2, 1).unwrap();
        let g = automorphism_group(&d);
        assert_eq!(g.order(), 168);
        assert!(g.verify(&d));
        let c = canonical_cert(&d);
        for s in 0..100 {
            assert_eq!(canonical_cert(&shuffle(&d, s)), c);
        }
        assert_eq!(c.digest.len(), 64);
    }

    #[test]
    fn small_geometries() {
        let (ag, _) = ag_design(2, 3, 1).unwrap();
        // AΓL(2,3) = AGL(2,3), order 9 * 48
        assert_eq!(automorphism_group(&ag).order(), 432);
        let pg = pg_design(3, 2, 2).unwrap();
        assert_eq!(automorphism_group(&pg).order(), 20160);
        assert!(!are_isomorphic(&pg, &pg_design(3, 2, 1).unwrap()));
    }

    #[test]
    fn repeated_blocks() {
        let d = IncidenceStructure::new(3, vec![vec![0, 1], vec![0, 1], vec![2]]).unwrap();
        let g = automorphism_group(&d);
        // swap points 0,1 and swap the two copies
        assert_eq!(g.order(), 4);
        assert!(g.verify(&d));
        assert_eq!(g.block_orbits(), vec![vec![0, 1], vec![2]]);
    }

    #[test]
    fn k4_resolution_orbit() {
        let d = ag_design(2, 2, 1).unwrap().0;
        let g = automorphism_group(&d);
        assert_eq!(g.order(), 24);
        let rs = d.resolutions(None).unwrap();
        assert_eq!(g.resolution_orbits(&rs), vec![vec![0]]);
        assert_eq!(g.point_orbits(), vec![vec![0, 1, 2, 3]]);
    }
}
