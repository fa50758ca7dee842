use std::collections::HashSet;

use super::classes::{check_limit, conjugation_orbit};
use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation};

fn require_two_group(s: &PermGroup, limit: u128) -> Result<()> {
    if !s.order().is_power_of_two() {
        return Err(Error::NotATwoGroup(s.order()));
    }
    check_limit(s, limit)
}

/// True when every non-identity element has order 2 (which forces abelian).
pub fn is_elementary_abelian(group: &PermGroup) -> bool {
    let gens = group.generators().gens();
    gens.iter().all(|g| g.order() <= 2)
        && gens
            .iter()
            .enumerate()
            .all(|(i, a)| gens[i + 1..].iter().all(|b| a.commutes_with(b)))
}

fn is_normal_in(sub: &PermGroup, group: &PermGroup) -> bool {
    let hgens = sub.generators().gens();
    group
        .generators()
        .gens()
        .iter()
        .all(|g| hgens.iter().all(|h| sub.has(&h.conjugate_by(g))))
}

/// Span of an elementary abelian set: `base` is closed already, `extra`
/// commutes with it and with itself.
fn span(base: &[Permutation], extra: &[Permutation]) -> Vec<Permutation> {
    let mut elements: Vec<Permutation> = base.to_vec();
    let mut seen: HashSet<Permutation> = elements.iter().cloned().collect();
    for t in extra {
        if seen.contains(t) {
            continue;
        }
        let shifted: Vec<Permutation> = elements.iter().map(|x| x.then(t)).collect();
        for y in shifted {
            seen.insert(y.clone());
            elements.push(y);
        }
    }
    elements.sort();
    elements
}

/// Every elementary abelian normal subgroup `⟨W, t^S⟩` obtained from `w` by
/// one involution `t` outside `w`, as sorted element lists.
fn one_step_extensions(s: &PermGroup, s_elements: &[Permutation], w: &[Permutation]) -> Vec<Vec<Permutation>> {
    let inside: HashSet<&Permutation> = w.iter().collect();
    let mut out: Vec<Vec<Permutation>> = Vec::new();
    for t in s_elements {
        if t.order() != 2 || inside.contains(t) {
            continue;
        }
        if !w.iter().all(|x| x.commutes_with(t)) {
            continue;
        }
        let orbit: Vec<Permutation> = conjugation_orbit(s, t).into_iter().map(|(y, _)| y).collect();
        let commuting = orbit.iter().enumerate().all(|(i, a)| {
            w.iter().all(|x| x.commutes_with(a)) && orbit[i + 1..].iter().all(|b| a.commutes_with(b))
        });
        if !commuting {
            continue;
        }
        let next = span(w, &orbit);
        if !out.contains(&next) {
            out.push(next);
        }
    }
    out
}

/// All maximal elementary abelian normal subgroups of the 2-group `s`, in
/// discovery order of a depth-first extension search from the trivial
/// subgroup.
pub fn maximal_elementary_abelian_normals(s: &PermGroup, limit: u128) -> Result<Vec<PermGroup>> {
    require_two_group(s, limit)?;
    let elements = s.enumerate_elements(limit)?;
    let mut visited: HashSet<Vec<Permutation>> = HashSet::new();
    let mut maximal: Vec<Vec<Permutation>> = Vec::new();
    let mut stack = vec![vec![Permutation::identity(s.degree())]];
    while let Some(w) = stack.pop() {
        if !visited.insert(w.clone()) {
            continue;
        }
        let ext = one_step_extensions(s, &elements, &w);
        if ext.is_empty() {
            maximal.push(w);
        } else {
            stack.extend(ext.into_iter().rev());
        }
    }
    Ok(maximal
        .iter()
        .map(|w| PermGroup::closure_of(s.degree(), w.iter()))
        .collect())
}

/// Whether the elementary abelian normal subgroup `v` of the 2-group `s` has
/// no proper elementary abelian normal overgroup in `s`.
pub fn is_maximal_el_ab_normal(s: &PermGroup, v: &PermGroup, limit: u128) -> Result<bool> {
    require_two_group(s, limit)?;
    if !v.is_subgroup_of(s)? {
        return Err(Error::CheckerPreconditionViolated("subgroup is not contained in the group".into()));
    }
    if !is_elementary_abelian(v) {
        return Err(Error::CheckerPreconditionViolated("subgroup is not elementary abelian".into()));
    }
    if !is_normal_in(v, s) {
        return Err(Error::CheckerPreconditionViolated("subgroup is not normal".into()));
    }
    let elements = s.enumerate_elements(limit)?;
    let mut w = v.enumerate_elements(limit)?;
    w.sort();
    Ok(one_step_extensions(s, &elements, &w).is_empty())
}
