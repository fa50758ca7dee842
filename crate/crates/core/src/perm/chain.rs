//! Deterministic Schreier–Sims stabilizer chains.
//!
//! All points are 0-based inside this module.

use rand::Rng;

use super::Permutation;

#[derive(Clone, Debug)]
pub(crate) struct Level {
    pub base_point: usize,
    /// Strong generators fixing every earlier base point.
    pub gens: Vec<Permutation>,
    /// Basic orbit in discovery order; `orbit[0] == base_point`.
    pub orbit: Vec<usize>,
    /// `reps[p]` maps the base point to `p`, together with its inverse.
    reps: Vec<Option<(Permutation, Permutation)>>,
}

impl Level {
    fn build(degree: usize, base_point: usize, gens: Vec<Permutation>) -> Level {
        let mut reps: Vec<Option<(Permutation, Permutation)>> = vec![None; degree];
        let id = Permutation::identity(degree);
        reps[base_point] = Some((id.clone(), id));
        let mut orbit = vec![base_point];
        let mut head = 0;
        while head < orbit.len() {
            let p = orbit[head];
            head += 1;
            for g in &gens {
                let q = g.apply0(p);
                if reps[q].is_none() {
                    let rep = reps[p].as_ref().unwrap().0.then(g);
                    let inv = rep.inverse();
                    reps[q] = Some((rep, inv));
                    orbit.push(q);
                }
            }
        }
        Level {
            base_point,
            gens,
            orbit,
            reps,
        }
    }

    #[inline]
    pub fn rep(&self, point: usize) -> Option<&Permutation> {
        self.reps[point].as_ref().map(|(r, _)| r)
    }

    #[inline]
    pub fn rep_inv(&self, point: usize) -> Option<&Permutation> {
        self.reps[point].as_ref().map(|(_, r)| r)
    }
}

/// A base with strong generators and explicit transversals.
#[derive(Clone, Debug)]
pub(crate) struct StabChain {
    pub degree: usize,
    pub levels: Vec<Level>,
    pub strong_gens: Vec<Permutation>,
}

impl StabChain {
    /// Runs Schreier–Sims on `gens`. The base starts with `initial_base` and is
    /// extended by the least point moved by each new strong generator.
    pub fn build(degree: usize, gens: &[Permutation], initial_base: &[usize]) -> StabChain {
        let mut strong: Vec<Permutation> = Vec::new();
        for g in gens {
            if !g.is_identity() && !strong.contains(g) {
                strong.push(g.clone());
            }
        }
        let mut base: Vec<usize> = initial_base.to_vec();
        if base.is_empty() {
            if let Some(first) = strong.iter().filter_map(|g| g.smallest_moved0()).min() {
                base.push(first);
            }
        }
        for g in &strong {
            if base.iter().all(|&b| g.apply0(b) == b) {
                base.push(g.smallest_moved0().unwrap());
            }
        }

        let mut chain = StabChain {
            degree,
            levels: Vec::with_capacity(base.len()),
            strong_gens: strong,
        };
        for i in 0..base.len() {
            let level = chain.make_level(&base, i);
            chain.levels.push(level);
        }

        let mut i = base.len() as isize - 1;
        while i >= 0 {
            let li = i as usize;
            chain.levels[li] = chain.make_level(&base, li);
            match chain.find_failing_schreier_gen(li) {
                None => i -= 1,
                Some((residue, drop)) => {
                    if drop == chain.levels.len() {
                        base.push(residue.smallest_moved0().unwrap());
                    }
                    chain.strong_gens.push(residue);
                    for l in li + 1..=drop {
                        let level = chain.make_level(&base, l);
                        if l < chain.levels.len() {
                            chain.levels[l] = level;
                        } else {
                            chain.levels.push(level);
                        }
                    }
                    i = drop as isize;
                }
            }
        }
        chain
    }

    fn make_level(&self, base: &[usize], i: usize) -> Level {
        let gens: Vec<Permutation> = self
            .strong_gens
            .iter()
            .filter(|g| base[..i].iter().all(|&b| g.apply0(b) == b))
            .cloned()
            .collect();
        Level::build(self.degree, base[i], gens)
    }

    /// Returns the first Schreier generator of level `i` that does not sift
    /// through the levels below it, with the level where it dropped out.
    fn find_failing_schreier_gen(&self, i: usize) -> Option<(Permutation, usize)> {
        let level = &self.levels[i];
        for &gamma in &level.orbit {
            let u = level.rep(gamma).unwrap();
            for s in &level.gens {
                let delta = s.apply0(gamma);
                let h = u.then(s).then(level.rep_inv(delta).unwrap());
                if h.is_identity() {
                    continue;
                }
                let (residue, drop) = self.sift_from(h, i + 1);
                if drop < self.levels.len() || !residue.is_identity() {
                    return Some((residue, drop));
                }
            }
        }
        None
    }

    /// Sifts `x` through levels `start..`; returns the residue and the index of
    /// the level where it dropped out (`levels.len()` if it passed all).
    pub fn sift_from(&self, mut x: Permutation, start: usize) -> (Permutation, usize) {
        for (j, level) in self.levels.iter().enumerate().skip(start) {
            let gamma = x.apply0(level.base_point);
            match level.rep_inv(gamma) {
                Some(inv) => x = x.then(inv),
                None => return (x, j),
            }
        }
        (x, self.levels.len())
    }

    pub fn contains(&self, x: &Permutation) -> bool {
        let (residue, drop) = self.sift_from(x.clone(), 0);
        drop == self.levels.len() && residue.is_identity()
    }

    pub fn order(&self) -> u128 {
        self.levels
            .iter()
            .map(|l| l.orbit.len() as u128)
            .try_fold(1u128, |acc, n| acc.checked_mul(n))
            .expect("group order overflows u128")
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    /// All elements, as products `u_k * ... * u_1` with the outermost loop over
    /// the first basic orbit.
    pub fn elements(&self) -> Vec<Permutation> {
        let mut out = Vec::new();
        let id = Permutation::identity(self.degree);
        self.collect_elements(0, &id, &mut out);
        out
    }

    fn collect_elements(&self, level: usize, suffix: &Permutation, out: &mut Vec<Permutation>) {
        if level == self.levels.len() {
            out.push(suffix.clone());
            return;
        }
        let l = &self.levels[level];
        for &p in &l.orbit {
            let next = l.rep(p).unwrap().then(suffix);
            self.collect_elements(level + 1, &next, out);
        }
    }

    /// Uniformly random element: one random transversal element per level.
    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Permutation {
        let mut x = Permutation::identity(self.degree);
        for level in &self.levels {
            let p = level.orbit[rng.random_range(0..level.orbit.len())];
            x = level.rep(p).unwrap().then(&x);
        }
        x
    }
}
