use super::classes::check_limit;
use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation};

fn filtered(group: &PermGroup, limit: u128, keep: impl Fn(&Permutation) -> bool) -> Result<PermGroup> {
    let elements = group.enumerate_elements(limit)?;
    Ok(PermGroup::closure_of(group.degree(), elements.iter().filter(|g| keep(g))))
}

/// `C_G(x)`, by filtering the elements of `group`.
pub fn centralizer(group: &PermGroup, x: &Permutation, limit: u128) -> Result<PermGroup> {
    check_limit(group, limit)?;
    if !group.contains(x)? {
        return Err(Error::ElementNotContained);
    }
    filtered(group, limit, |g| g.commutes_with(x))
}

/// `N_G(H)`: elements `g` with `h^g ∈ H` for every generator `h` of `H`.
pub fn normalizer(group: &PermGroup, sub: &PermGroup, limit: u128) -> Result<PermGroup> {
    check_limit(group, limit)?;
    if !sub.is_subgroup_of(group)? {
        return Err(Error::NotASubgroup);
    }
    let hgens = sub.generators().gens();
    filtered(group, limit, |g| hgens.iter().all(|h| sub.has(&h.conjugate_by(g))))
}

/// `Z(G)`: elements commuting with every generator.
pub fn center(group: &PermGroup, limit: u128) -> Result<PermGroup> {
    check_limit(group, limit)?;
    let gens = group.generators().gens();
    filtered(group, limit, |g| gens.iter().all(|h| g.commutes_with(h)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str, n: usize) -> Permutation {
        Permutation::parse(s, n).unwrap()
    }

    #[test]
    fn s4_examples() {
        let s4 = PermGroup::symmetric(4);
        let elems = s4.enumerate_elements(100).unwrap();

        let z = perm("(1,2)(3,4)", 4);
        let c = centralizer(&s4, &z, 100).unwrap();
        let brute = elems.iter().filter(|g| &(*g * &z) == &(&z * *g)).count();
        assert_eq!(brute, 8);
        assert_eq!(c.order(), 8);
        for g in &elems {
            assert_eq!(c.has(g), g.commutes_with(&z));
        }

        assert!(center(&s4, 100).unwrap().is_trivial());

        let c3 = PermGroup::from_perms(4, vec![perm("(1,2,3)", 4)]).unwrap();
        let n = normalizer(&s4, &c3, 100).unwrap();
        let brute = elems
            .iter()
            .filter(|g| c3.has(&perm("(1,2,3)", 4).conjugate_by(g)))
            .count();
        assert_eq!(brute, 6);
        assert_eq!(n.order(), 6);
    }

    #[test]
    fn abelian_center_is_everything() {
        let c4 = PermGroup::from_perms(4, vec![perm("(1,2,3,4)", 4)]).unwrap();
        assert_eq!(center(&c4, 100).unwrap().order(), 4);
    }
}
