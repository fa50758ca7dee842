use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjugacyClass {
    pub representative: Permutation,
    pub size: u128,
    pub centralizer_order: u128,
    pub element_order: u128,
}

/// Conjugacy classes with power maps, built by brute force.
#[derive(Clone, Debug, Serialize)]
pub struct ClassTable {
    pub group_order: u128,
    pub classes: Vec<ConjugacyClass>,
    /// For each prime `p` dividing the group order, `power_maps[p][i]` is the
    /// class of `representative_i^p`.
    pub power_maps: BTreeMap<u64, Vec<usize>>,
    #[serde(skip)]
    class_of: HashMap<Permutation, usize>,
}

impl ClassTable {
    /// Index of the class containing `x`.
    pub fn class_of(&self, x: &Permutation) -> Option<usize> {
        self.class_of.get(x).copied()
    }

    /// ATLAS-style labels: element order followed by A, B, ... in class order.
    pub fn class_names(&self) -> Vec<String> {
        let mut seen: HashMap<u128, usize> = HashMap::new();
        self.classes
            .iter()
            .map(|c| {
                let n = seen.entry(c.element_order).or_insert(0);
                let label = letters(*n);
                *n += 1;
                format!("{}{}", c.element_order, label)
            })
            .collect()
    }

    /// Primes dividing the group order, ascending.
    pub fn primes(&self) -> Vec<u64> {
        self.power_maps.keys().copied().collect()
    }
}

fn letters(mut n: usize) -> String {
    let mut out = Vec::new();
    loop {
        out.push((b'A' + (n % 26) as u8) as char);
        if n < 26 {
            break;
        }
        n = n / 26 - 1;
    }
    out.iter().rev().collect()
}

pub(crate) fn prime_factors(mut n: u128) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2u128;
    while p * p <= n {
        if n % p == 0 {
            out.push(p as u64);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n as u64);
    }
    out
}

/// Conjugation orbit of `x` under `group`, each member with a witness `g`
/// such that `x^g = g^-1 x g` is that member.
pub(crate) fn conjugation_orbit(group: &PermGroup, x: &Permutation) -> Vec<(Permutation, Permutation)> {
    let gens = group.generators().gens();
    let mut index: HashMap<Permutation, usize> = HashMap::new();
    let mut orbit = vec![(x.clone(), Permutation::identity(x.degree()))];
    index.insert(x.clone(), 0);
    let mut head = 0;
    while head < orbit.len() {
        for g in gens {
            let y = orbit[head].0.conjugate_by(g);
            if !index.contains_key(&y) {
                let w = orbit[head].1.then(g);
                index.insert(y.clone(), orbit.len());
                orbit.push((y, w));
            }
        }
        head += 1;
    }
    orbit
}

pub(crate) fn check_limit(group: &PermGroup, limit: u128) -> Result<()> {
    if group.order() > limit {
        return Err(Error::OrderExceedsLimit {
            order: group.order(),
            limit,
        });
    }
    Ok(())
}

/// All conjugacy classes of `group`, ordered by element order, then class
/// size, then the position of the representative in element enumeration.
/// Each representative is the first member of its class in that enumeration.
pub fn conjugacy_classes(group: &PermGroup, limit: u128) -> Result<ClassTable> {
    let elements = group.enumerate_elements(limit)?;
    let mut assigned: HashMap<Permutation, usize> = HashMap::with_capacity(elements.len());
    let mut raw: Vec<(usize, Vec<Permutation>)> = Vec::new();
    for (pos, x) in elements.iter().enumerate() {
        if assigned.contains_key(x) {
            continue;
        }
        let members: Vec<Permutation> = conjugation_orbit(group, x).into_iter().map(|(y, _)| y).collect();
        for m in &members {
            assigned.insert(m.clone(), raw.len());
        }
        raw.push((pos, members));
    }
    let mut order: Vec<usize> = (0..raw.len()).collect();
    order.sort_by_key(|&i| (raw[i].1[0].order(), raw[i].1.len(), raw[i].0));

    let mut class_of = HashMap::with_capacity(elements.len());
    let mut classes = Vec::with_capacity(raw.len());
    for (new_idx, &old) in order.iter().enumerate() {
        let members = &raw[old].1;
        for m in members {
            class_of.insert(m.clone(), new_idx);
        }
        let size = members.len() as u128;
        classes.push(ConjugacyClass {
            representative: members[0].clone(),
            size,
            centralizer_order: group.order() / size,
            element_order: members[0].order(),
        });
    }
    let mut table = ClassTable {
        group_order: group.order(),
        classes,
        power_maps: BTreeMap::new(),
        class_of,
    };
    for p in prime_factors(group.order()) {
        let map = power_map(&table, p);
        table.power_maps.insert(p, map);
    }
    Ok(table)
}

/// Class of `representative^p` for every class.
pub fn power_map(table: &ClassTable, p: u64) -> Vec<usize> {
    table
        .classes
        .iter()
        .map(|c| {
            let y = c.representative.pow(p as i64);
            table.class_of(&y).expect("powers stay in the group")
        })
        .collect()
}

/// Decides whether `y = g^-1 x g` for some `g` in `group`, returning such a
/// `g`. Both elements must lie in the group.
pub fn are_conjugate(group: &PermGroup, x: &Permutation, y: &Permutation, limit: u128) -> Result<Option<Permutation>> {
    if !group.contains(x)? || !group.contains(y)? {
        return Err(Error::ElementNotContained);
    }
    check_limit(group, limit)?;
    if x == y {
        return Ok(Some(Permutation::identity(x.degree())));
    }
    if x.cycle_type() != y.cycle_type() {
        return Ok(None);
    }
    Ok(conjugation_orbit(group, x)
        .into_iter()
        .find(|(z, _)| z == y)
        .map(|(_, w)| w))
}
