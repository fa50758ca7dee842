use crate::error::{Error, Result};
use crate::perm::{GeneratorSet, PermGroup, Permutation};

/// Greedy last-to-first removal: repeatedly drop the highest-indexed
/// generator whose removal keeps `still_ok` true, restarting the scan after
/// each removal. Returns the surviving 1-based indices.
fn greedy_reduce(count: usize, mut still_ok: impl FnMut(&[usize]) -> bool) -> Vec<usize> {
    let mut current: Vec<usize> = (1..=count).collect();
    'scan: loop {
        for pos in (0..current.len()).rev() {
            let mut reduced = current.clone();
            reduced.remove(pos);
            if still_ok(&reduced) {
                current = reduced;
                continue 'scan;
            }
        }
        return current;
    }
}

fn subgroup_on(gens: &GeneratorSet, letters: &[usize], exclude: Option<&PermGroup>) -> PermGroup {
    let mut perms: Vec<Permutation> = letters.iter().map(|&i| gens.gens()[i - 1].clone()).collect();
    if let Some(e) = exclude {
        perms.extend(e.generators().gens().iter().cloned());
    }
    PermGroup::from_perms(gens.degree(), perms).expect("degrees checked by caller")
}

pub(crate) fn check_degree(gens: &GeneratorSet, degree: usize) -> Result<()> {
    if gens.degree() != degree {
        return Err(Error::DegreeMismatch(gens.degree(), degree));
    }
    Ok(())
}

/// Shrinks `gens` to a subset whose span, together with `exclude`, still
/// contains `target`. Returns the kept 1-based indices and the reduced set.
pub fn reduce_gens_for_group(
    gens: &GeneratorSet,
    target: &PermGroup,
    exclude: Option<&PermGroup>,
) -> Result<(Vec<usize>, GeneratorSet)> {
    check_degree(gens, target.degree())?;
    if let Some(e) = exclude {
        check_degree(gens, e.degree())?;
    }
    let all: Vec<usize> = (1..=gens.len()).collect();
    if !target.is_subgroup_of(&subgroup_on(gens, &all, exclude))? {
        return Err(Error::TargetNotCovered);
    }
    let kept = greedy_reduce(gens.len(), |letters| {
        target
            .is_subgroup_of(&subgroup_on(gens, letters, exclude))
            .unwrap_or(false)
    });
    let reduced = gens.select(&kept);
    Ok((kept, reduced))
}

/// Shrinks `gens` to a subset whose span still contains `x`.
pub fn reduce_gens_for_elt(
    gens: &GeneratorSet,
    x: &Permutation,
) -> Result<(Vec<usize>, GeneratorSet)> {
    check_degree(gens, x.degree())?;
    let all: Vec<usize> = (1..=gens.len()).collect();
    if !subgroup_on(gens, &all, None).contains(x)? {
        return Err(Error::ElementNotContained);
    }
    let kept = greedy_reduce(gens.len(), |letters| subgroup_on(gens, letters, None).has(x));
    let reduced = gens.select(&kept);
    Ok((kept, reduced))
}
