use std::collections::HashMap;

use super::chain::StabChain;
use super::{PermGroup, Permutation};
use crate::error::{Error, Result};

/// The action of `G` on the right cosets of a subgroup `U`.
#[derive(Clone, Debug)]
pub struct CosetActionResult {
    /// Image of `G`, acting on points `1..=[G:U]`.
    pub image: PermGroup,
    /// `point_to_coset[i]` is the lexicographically least element of the coset
    /// labelled by point `i + 1`; point 1 is `U` itself.
    pub point_to_coset: Vec<Permutation>,
    /// Order of the kernel of the action.
    pub kernel_order: u128,
    canon: CosetCanon,
    labels: HashMap<Permutation, usize>,
}

impl CosetActionResult {
    pub fn degree(&self) -> usize {
        self.point_to_coset.len()
    }

    pub fn is_faithful(&self) -> bool {
        self.kernel_order == 1
    }

    /// Image of an element of `G` under the action, `None` if `x` does not
    /// permute the cosets (i.e. `x` is not in `G`).
    pub fn act(&self, x: &Permutation) -> Option<Permutation> {
        let mut images = Vec::with_capacity(self.degree());
        for rep in &self.point_to_coset {
            let label = self.labels.get(&self.canon.canonical(&rep.then(x)))?;
            images.push(*label as u32);
        }
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if std::mem::replace(&mut seen[i as usize], true) {
                return None;
            }
        }
        Some(Permutation::from_raw(images))
    }
}

/// Canonical labels for the right cosets `U x`.
#[derive(Clone, Debug)]
struct CosetCanon {
    chain: StabChain,
}

impl CosetCanon {
    fn new(subgroup: &PermGroup) -> Self {
        let degree = subgroup.degree();
        let full_base: Vec<usize> = (0..degree).collect();
        CosetCanon {
            chain: StabChain::build(degree, subgroup.strong_generators(), &full_base),
        }
    }

    /// Least element of `U x` in image-table order.
    fn canonical(&self, x: &Permutation) -> Permutation {
        let mut y = x.clone();
        for level in &self.chain.levels {
            let best = level
                .orbit
                .iter()
                .copied()
                .min_by_key(|&gamma| y.apply0(gamma))
                .unwrap();
            if best != level.base_point {
                y = level.rep(best).unwrap().then(&y);
            }
        }
        y
    }
}

/// Permutation representation of `group` on the right cosets of `subgroup`.
///
/// Cosets are numbered in breadth-first order from `U`, expanding by the
/// generators of `group` in order. Fails if `subgroup` is not contained in
/// `group` or the index is above `index_limit`.
pub fn coset_action(
    group: &PermGroup,
    subgroup: &PermGroup,
    index_limit: u128,
) -> Result<CosetActionResult> {
    if !subgroup.is_subgroup_of(group)? {
        return Err(Error::NotASubgroup);
    }
    let index = group.order() / subgroup.order();
    if index > index_limit {
        return Err(Error::IndexExceedsLimit {
            index,
            limit: index_limit,
        });
    }
    let canon = CosetCanon::new(subgroup);
    let degree = group.degree();
    let gens = group.generators().gens();

    let mut reps = vec![Permutation::identity(degree)];
    let mut label: HashMap<Permutation, usize> = HashMap::new();
    label.insert(reps[0].clone(), 0);
    let mut tables: Vec<Vec<u32>> = vec![Vec::with_capacity(index as usize); gens.len()];
    let mut head = 0;
    while head < reps.len() {
        for (gi, g) in gens.iter().enumerate() {
            let next = canon.canonical(&reps[head].then(g));
            let target = match label.get(&next) {
                Some(&j) => j,
                None => {
                    let j = reps.len();
                    label.insert(next.clone(), j);
                    reps.push(next);
                    j
                }
            };
            tables[gi].push(target as u32);
        }
        head += 1;
    }
    debug_assert_eq!(reps.len() as u128, index);

    let images: Vec<Permutation> = tables.into_iter().map(Permutation::from_raw).collect();
    let image = PermGroup::from_perms(reps.len(), images)?;
    let kernel_order = group.order() / image.order();
    Ok(CosetActionResult {
        image,
        point_to_coset: reps,
        kernel_order,
        canon,
        labels: label,
    })
}
