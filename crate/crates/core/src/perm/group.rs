use rand::Rng;

use super::chain::StabChain;
use super::Permutation;
use crate::error::{Error, Result};

/// Ordered, named generators of a common degree. Word letters index into it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSet {
    degree: usize,
    gens: Vec<Permutation>,
    names: Vec<String>,
}

/// `"$.1"`, `"$.2"`, ..., the default generator labels.
pub fn default_names(count: usize) -> Vec<String> {
    (1..=count).map(|i| format!("$.{i}")).collect()
}

impl GeneratorSet {
    pub fn new(degree: usize, gens: Vec<Permutation>) -> Result<Self> {
        let names = default_names(gens.len());
        GeneratorSet::with_names(degree, gens, names)
    }

    pub fn with_names(degree: usize, gens: Vec<Permutation>, names: Vec<String>) -> Result<Self> {
        if let Some(g) = gens.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch(degree, g.degree()));
        }
        if names.len() != gens.len() {
            return Err(Error::NameCountMismatch {
                names: names.len(),
                gens: gens.len(),
            });
        }
        Ok(GeneratorSet {
            degree,
            gens,
            names,
        })
    }

    /// Parses each string as cycle notation over `degree` points.
    pub fn parse(degree: usize, cycles: &[&str]) -> Result<Self> {
        let gens = cycles
            .iter()
            .map(|c| Permutation::parse(c, degree))
            .collect::<Result<Vec<_>>>()?;
        GeneratorSet::new(degree, gens)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn gens(&self) -> &[Permutation] {
        &self.gens
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Generator with the 1-based index `letter`.
    pub fn get(&self, letter: usize) -> Option<&Permutation> {
        letter.checked_sub(1).and_then(|i| self.gens.get(i))
    }

    /// The sub-collection at the given 1-based indices, names carried along.
    pub fn select(&self, letters: &[usize]) -> GeneratorSet {
        GeneratorSet {
            degree: self.degree,
            gens: letters.iter().map(|&i| self.gens[i - 1].clone()).collect(),
            names: letters.iter().map(|&i| self.names[i - 1].clone()).collect(),
        }
    }
}

/// A permutation group: its generators plus a certified stabilizer chain.
///
/// Immutable after construction.
#[derive(Clone, Debug)]
pub struct PermGroup {
    gens: GeneratorSet,
    chain: StabChain,
    order: u128,
}

impl PermGroup {
    pub fn from_generators(gens: GeneratorSet) -> PermGroup {
        let chain = StabChain::build(gens.degree(), gens.gens(), &[]);
        let order = chain.order();
        PermGroup { gens, chain, order }
    }

    pub fn from_perms(degree: usize, perms: Vec<Permutation>) -> Result<PermGroup> {
        Ok(PermGroup::from_generators(GeneratorSet::new(degree, perms)?))
    }

    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup::from_generators(GeneratorSet::new(degree, Vec::new()).unwrap())
    }

    /// `Sym(n)` generated by `(1,2)` and `(1,2,...,n)`.
    pub fn symmetric(n: usize) -> PermGroup {
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(Permutation::from_cycles(n, &[vec![1, 2]]).unwrap());
        }
        if n >= 3 {
            gens.push(Permutation::from_cycles(n, &[(1..=n).collect()]).unwrap());
        }
        PermGroup::from_perms(n, gens).unwrap()
    }

    /// `Alt(n)` generated by the 3-cycles `(1,2,i)`.
    pub fn alternating(n: usize) -> PermGroup {
        let gens = (3..=n)
            .map(|i| Permutation::from_cycles(n, &[vec![1, 2, i]]).unwrap())
            .collect();
        PermGroup::from_perms(n, gens).unwrap()
    }

    /// The subgroup generated by `elements`, keeping only those elements not
    /// already in the group generated by their predecessors.
    pub fn closure_of<'a, I>(degree: usize, elements: I) -> PermGroup
    where
        I: IntoIterator<Item = &'a Permutation>,
    {
        let mut group = PermGroup::trivial(degree);
        for x in elements {
            if !group.chain.contains(x) {
                let mut gens = group.gens.gens().to_vec();
                gens.push(x.clone());
                group = PermGroup::from_perms(degree, gens).unwrap();
            }
        }
        group
    }

    pub fn degree(&self) -> usize {
        self.gens.degree()
    }

    pub fn generators(&self) -> &GeneratorSet {
        &self.gens
    }

    pub fn order(&self) -> u128 {
        self.order
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    /// 1-based base points.
    pub fn base(&self) -> Vec<usize> {
        self.chain.base().into_iter().map(|b| b + 1).collect()
    }

    pub fn strong_generators(&self) -> &[Permutation] {
        &self.chain.strong_gens
    }

    /// Basic orbit lengths, one per base point.
    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.chain.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// Transversal of the `level`-th stabilizer (0-based level), as
    /// `(1-based orbit point, representative)` pairs in orbit order.
    pub fn transversal(&self, level: usize) -> Vec<(usize, Permutation)> {
        let l = &self.chain.levels[level];
        l.orbit
            .iter()
            .map(|&p| (p + 1, l.rep(p).unwrap().clone()))
            .collect()
    }

    /// Strong generators of the `level`-th stabilizer in the chain.
    pub fn level_generators(&self, level: usize) -> &[Permutation] {
        &self.chain.levels[level].gens
    }


    pub fn contains(&self, x: &Permutation) -> Result<bool> {
        self.check_degree(x.degree())?;
        Ok(self.chain.contains(x))
    }

    pub(crate) fn has(&self, x: &Permutation) -> bool {
        self.chain.contains(x)
    }

    fn check_degree(&self, degree: usize) -> Result<()> {
        if degree != self.degree() {
            return Err(Error::DegreeMismatch(self.degree(), degree));
        }
        Ok(())
    }

    /// `self ≤ other`: every generator of `self` sifts through `other`.
    pub fn is_subgroup_of(&self, other: &PermGroup) -> Result<bool> {
        self.check_degree(other.degree())?;
        Ok(self.gens.gens().iter().all(|g| other.chain.contains(g)))
    }

    pub fn equals(&self, other: &PermGroup) -> Result<bool> {
        Ok(self.order == other.order && self.is_subgroup_of(other)?)
    }

    /// The subgroup generated by `self` and `other`.
    pub fn join(&self, other: &PermGroup) -> Result<PermGroup> {
        self.check_degree(other.degree())?;
        let mut gens = self.gens.gens().to_vec();
        gens.extend(other.gens.gens().iter().cloned());
        PermGroup::from_perms(self.degree(), gens)
    }

    /// The subgroup generated by `self` and one more element.
    pub fn adjoin(&self, x: &Permutation) -> Result<PermGroup> {
        self.check_degree(x.degree())?;
        let mut gens = self.gens.gens().to_vec();
        gens.push(x.clone());
        PermGroup::from_perms(self.degree(), gens)
    }

    /// All elements, in transversal-product order. Fails when the order is
    /// above `limit`.
    pub fn enumerate_elements(&self, limit: u128) -> Result<Vec<Permutation>> {
        if self.order > limit {
            return Err(Error::OrderExceedsLimit {
                order: self.order,
                limit,
            });
        }
        Ok(self.chain.elements())
    }

    /// Uniformly distributed element drawn through the stabilizer chain.
    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Permutation {
        self.chain.random_element(rng)
    }

    /// Intersection by filtering the elements of the smaller group.
    pub fn intersection(&self, other: &PermGroup, limit: u128) -> Result<PermGroup> {
        self.check_degree(other.degree())?;
        if self.is_subgroup_of(other)? {
            return Ok(self.clone());
        }
        if other.is_subgroup_of(self)? {
            return Ok(other.clone());
        }
        let (small, large) = if self.order <= other.order {
            (self, other)
        } else {
            (other, self)
        };
        let elements = small.enumerate_elements(limit)?;
        Ok(PermGroup::closure_of(
            self.degree(),
            elements.iter().filter(|x| large.has(x)),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn perm(s: &str, n: usize) -> Permutation {
        Permutation::parse(s, n).unwrap()
    }

    /// Closure by repeated right multiplication with the generators.
    fn brute_closure(degree: usize, gens: &[Permutation]) -> HashSet<Permutation> {
        let mut seen = HashSet::new();
        let id = Permutation::identity(degree);
        seen.insert(id.clone());
        let mut stack = vec![id];
        while let Some(x) = stack.pop() {
            for g in gens {
                let y = &x * g;
                if seen.insert(y.clone()) {
                    stack.push(y);
                }
            }
        }
        seen
    }

    #[test]
    fn symmetric_orders() {
        assert_eq!(PermGroup::symmetric(8).order(), 40320);
        assert_eq!(PermGroup::symmetric(1).order(), 1);
        assert_eq!(PermGroup::alternating(5).order(), 60);
    }

    #[test]
    fn empty_generators_give_trivial_group() {
        let g = PermGroup::from_perms(5, vec![]).unwrap();
        assert_eq!(g.order(), 1);
        assert!(g.contains(&Permutation::identity(5)).unwrap());
        assert_eq!(g.enumerate_elements(10).unwrap(), vec![Permutation::identity(5)]);
    }

    #[test]
    fn s8_target_subgroup_order_matches_closure() {
        let gens = vec![perm("(1,3,6)(2,4)", 8), perm("(1,7,8)(2,5)", 8)];
        let closure = brute_closure(8, &gens);
        // frozen from the closure oracle
        assert_eq!(closure.len(), 360);
        let g = PermGroup::from_perms(8, gens).unwrap();
        assert_eq!(g.order(), 360);
        for x in &closure {
            assert!(g.contains(x).unwrap());
        }
    }

    #[test]
    fn membership_examples() {
        let c3 = PermGroup::from_perms(3, vec![perm("(1,2,3)", 3)]).unwrap();
        assert!(!c3.contains(&perm("(1,2)", 3)).unwrap());
        let s3 = PermGroup::from_perms(3, vec![perm("(1,2)", 3), perm("(1,2,3)", 3)]).unwrap();
        assert!(s3.contains(&perm("(2,3)", 3)).unwrap());
        assert_eq!(
            s3.contains(&Permutation::identity(4)),
            Err(Error::DegreeMismatch(3, 4))
        );
    }

    #[test]
    fn subgroup_relations() {
        let s3 = PermGroup::symmetric(3);
        let t = PermGroup::from_perms(3, vec![perm("(1,2)", 3)]).unwrap();
        assert!(t.is_subgroup_of(&s3).unwrap());
        assert!(!t.equals(&s3).unwrap());
        let c3a = PermGroup::from_perms(3, vec![perm("(1,2,3)", 3)]).unwrap();
        let c3b = PermGroup::from_perms(3, vec![perm("(1,3,2)", 3)]).unwrap();
        assert!(c3a.equals(&c3b).unwrap());

        let v4 = PermGroup::from_perms(4, vec![perm("(1,2)(3,4)", 4), perm("(1,3)(2,4)", 4)])
            .unwrap();
        let a4 = PermGroup::alternating(4);
        let a4_elems: HashSet<_> = brute_closure(4, a4.generators().gens());
        assert!(v4.generators().gens().iter().all(|g| a4_elems.contains(g)));
        assert!(v4.is_subgroup_of(&a4).unwrap());
    }

    #[test]
    fn enumerate_is_exact_and_starts_with_identity() {
        let s4 = PermGroup::symmetric(4);
        let elems = s4.enumerate_elements(100).unwrap();
        assert_eq!(elems.len(), 24);
        assert!(elems[0].is_identity());
        let set: HashSet<_> = elems.iter().cloned().collect();
        assert_eq!(set.len(), 24);
        assert!(matches!(
            PermGroup::symmetric(8).enumerate_elements(1000),
            Err(Error::OrderExceedsLimit { .. })
        ));
    }

    #[test]
    fn chain_invariants() {
        let g = PermGroup::symmetric(6);
        let base = g.base();
        assert_eq!(g.orbit_lengths().iter().product::<usize>() as u128, g.order());
        for (i, _) in base.iter().enumerate() {
            for s in g.level_generators(i) {
                for &b in &base[..i] {
                    assert_eq!(s.image(b), b);
                }
            }
        }
        for gen in g.generators().gens() {
            assert!(g.contains(gen).unwrap());
        }
    }

    #[test]
    fn intersection_by_filtering() {
        let a4 = PermGroup::alternating(4);
        let d8 = PermGroup::from_perms(4, vec![perm("(1,2,3,4)", 4), perm("(1,3)", 4)]).unwrap();
        let meet = a4.intersection(&d8, 1000).unwrap();
        assert_eq!(meet.order(), 4);
    }
}
