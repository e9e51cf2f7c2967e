//! Permutation groups given by generators: exact order via a Schreier–Sims
//! stabilizer chain, and orbits.

/// Permutations act on the right: the image of `x` under `g` is `g[x]`, and
/// `g * h` applies `g` first.
type Perm = Vec<u32>;

fn mul(g: &[u32], h: &[u32]) -> Perm {
    g.iter().map(|&x| h[x as usize]).collect()
}

fn inv(g: &[u32]) -> Perm {
    let mut r = vec![0; g.len()];
    for (i, &x) in g.iter().enumerate() {
        r[x as usize] = i as u32;
    }
    r
}

fn is_identity(g: &[u32]) -> bool {
    g.iter().enumerate().all(|(i, &x)| i as u32 == x)
}

struct Level {
    point: usize,
    orbit: Vec<usize>,
    /// `u[b]` maps `point` to `b`, for `b` in the orbit.
    u: Vec<Option<Perm>>,
    /// Generator indices (into the strong generating set) fixing the earlier base points.
    gens: Vec<usize>,
    /// Schreier generators `(orbit position, generator index)` already sifted.
    checked: std::collections::HashSet<(usize, usize)>,
}

/// Stabilizer chain built with a fixed base: each new base point is the
/// smallest point moved by the generator that needs it.
pub(crate) struct Chain {
    n: usize,
    strong: Vec<Perm>,
    levels: Vec<Level>,
}

impl Chain {
    pub(crate) fn new(n: usize, generators: &[Vec<usize>]) -> Self {
        let mut c = Chain {
            n,
            strong: Vec::new(),
            levels: Vec::new(),
        };
        for g in generators {
            let g: Perm = g.iter().map(|&x| x as u32).collect();
            let (h, j) = c.sift(&g, 0);
            if !is_identity(&h) {
                c.add(h, j);
            }
        }
        c.complete();
        c
    }

    fn sift(&self, g: &[u32], from: usize) -> (Perm, usize) {
        let mut h = g.to_vec();
        for (i, lv) in self.levels.iter().enumerate().skip(from) {
            let b = h[lv.point] as usize;
            match &lv.u[b] {
                Some(u) => h = mul(&h, &inv(u)),
                None => return (h, i),
            }
        }
        (h, self.levels.len())
    }

    /// Adds a strong generator fixing the base points of levels `< j`.
    fn add(&mut self, g: Perm, j: usize) {
        let idx = self.strong.len();
        if j == self.levels.len() {
            let point = g
                .iter()
                .enumerate()
                .position(|(i, &x)| i as u32 != x)
                .expect("non-identity");
            let mut u = vec![None; self.n];
            u[point] = Some((0..self.n as u32).collect());
            self.levels.push(Level {
                point,
                orbit: vec![point],
                u,
                gens: Vec::new(),
                checked: Default::default(),
            });
        }
        self.strong.push(g);
        for lv in &mut self.levels[..=j] {
            lv.gens.push(idx);
        }
    }

    fn extend_orbit(&mut self, i: usize) {
        let lv = &mut self.levels[i];
        let mut k = 0;
        while k < lv.orbit.len() {
            let b = lv.orbit[k];
            for &gi in &lv.gens {
                let g = &self.strong[gi];
                let c = g[b] as usize;
                if lv.u[c].is_none() {
                    let ub = lv.u[b].as_ref().unwrap();
                    lv.u[c] = Some(mul(ub, g));
                    lv.orbit.push(c);
                }
            }
            k += 1;
        }
    }

    fn complete(&mut self) {
        let mut i = self.levels.len();
        while i > 0 {
            let l = i - 1;
            self.extend_orbit(l);
            let mut restart = None;
            'pairs: for pos in 0..self.levels[l].orbit.len() {
                for gk in 0..self.levels[l].gens.len() {
                    let gi = self.levels[l].gens[gk];
                    if !self.levels[l].checked.insert((pos, gi)) {
                        continue;
                    }
                    let lv = &self.levels[l];
                    let b = lv.orbit[pos];
                    let g = &self.strong[gi];
                    let c = g[b] as usize;
                    let s = mul(
                        &mul(lv.u[b].as_ref().unwrap(), g),
                        &inv(lv.u[c].as_ref().unwrap()),
                    );
                    let (h, j) = self.sift(&s, l + 1);
                    if !is_identity(&h) {
                        self.add(h, j);
                        restart = Some(j + 1);
                        break 'pairs;
                    }
                }
            }
            i = match restart {
                Some(r) => r.min(self.levels.len()),
                None => i - 1,
            };
        }
    }

    pub(crate) fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }
}

/// Orbits of `0..n` under the generators, each sorted, ordered by least element.
pub(crate) fn orbits(n: usize, generators: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut root: Vec<usize> = (0..n).collect();
    fn find(r: &mut [usize], mut x: usize) -> usize {
        while r[x] != x {
            r[x] = r[r[x]];
            x = r[x];
        }
        x
    }
    for g in generators {
        for (x, &y) in g.iter().enumerate() {
            let (a, b) = (find(&mut root, x), find(&mut root, y));
            if a != b {
                root[a.max(b)] = a.min(b);
            }
        }
    }
    let mut by_root: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for x in 0..n {
        let r = find(&mut root, x);
        by_root.entry(r).or_default().push(x);
    }
    by_root.into_values().collect()
}
