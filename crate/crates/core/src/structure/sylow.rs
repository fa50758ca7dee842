use super::classes::{check_limit, conjugacy_classes, ClassTable, ConjugacyClass};
use super::subgroups::normalizer;
use crate::error::Result;
use crate::perm::PermGroup;

pub(crate) fn two_part(n: u128) -> u128 {
    1 << n.trailing_zeros()
}

pub(crate) fn two_valuation(n: u128) -> u32 {
    n.trailing_zeros()
}

/// A Sylow 2-subgroup, grown from the trivial group: at each step the least
/// element (in enumeration order) of 2-power order in `N_G(P) \ P` is
/// adjoined.
pub fn sylow2(group: &PermGroup, limit: u128) -> Result<PermGroup> {
    check_limit(group, limit)?;
    let target = two_part(group.order());
    let mut p = PermGroup::trivial(group.degree());
    while p.order() < target {
        let n = normalizer(group, &p, limit)?;
        let elements = n.enumerate_elements(limit)?;
        let x = elements
            .iter()
            .find(|x| x.order().is_power_of_two() && !p.has(x))
            .expect("a non-Sylow 2-subgroup has a 2-element in its normalizer outside it");
        let next = p.adjoin(x)?;
        debug_assert!(next.order().is_power_of_two());
        p = next;
    }
    Ok(p)
}

/// Indices of the classes of 2-central involutions in `table`: involutions
/// whose centralizer order has the full 2-part of the group order.
pub fn two_central_class_indices(table: &ClassTable) -> Vec<usize> {
    let v = two_valuation(table.group_order);
    table
        .classes
        .iter()
        .enumerate()
        .filter(|(_, c)| c.element_order == 2 && two_valuation(c.centralizer_order) == v)
        .map(|(i, _)| i)
        .collect()
}

/// Classes of involutions lying in the center of some Sylow 2-subgroup.
pub fn two_central_involutions(group: &PermGroup, limit: u128) -> Result<Vec<ConjugacyClass>> {
    let table = conjugacy_classes(group, limit)?;
    Ok(two_central_class_indices(&table)
        .into_iter()
        .map(|i| table.classes[i].clone())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn perm(s: &str, n: usize) -> Permutation {
        Permutation::parse(s, n).unwrap()
    }

    #[test]
    fn sylow_orders() {
        for (n, expected) in [(3, 2), (4, 8), (5, 8), (6, 16)] {
            let g = PermGroup::symmetric(n);
            let p = sylow2(&g, 1000).unwrap();
            assert_eq!(p.order(), expected);
            let elems = p.enumerate_elements(1000).unwrap();
            assert!(elems.iter().all(|x| x.order().is_power_of_two()));
        }
        let c4 = PermGroup::from_perms(4, vec![perm("(1,2,3,4)", 4)]).unwrap();
        assert!(sylow2(&c4, 100).unwrap().equals(&c4).unwrap());
        let c3 = PermGroup::from_perms(3, vec![perm("(1,2,3)", 3)]).unwrap();
        assert!(sylow2(&c3, 100).unwrap().is_trivial());
    }

    #[test]
    fn two_central_examples() {
        let s4 = PermGroup::symmetric(4);
        let classes = two_central_involutions(&s4, 1000).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].representative.cycle_type(), vec![2, 2]);
        assert_eq!(classes[0].centralizer_order, 8);

        let c2 = PermGroup::from_perms(2, vec![perm("(1,2)", 2)]).unwrap();
        assert_eq!(two_central_involutions(&c2, 10).unwrap().len(), 1);

        let c5 = PermGroup::from_perms(5, vec![perm("(1,2,3,4,5)", 5)]).unwrap();
        assert!(two_central_involutions(&c5, 10).unwrap().is_empty());
    }
}
