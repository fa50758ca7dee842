use log::info;
use num_integer::Integer;

use super::reduce::{check_degree, reduce_gens_for_elt};
use super::walker::LevelWalker;
use super::{LookupOptions, LookupResult};
use crate::error::{Error, Result};
use crate::perm::{GeneratorSet, PermGroup, Permutation};
use crate::structure::are_conjugate;
use crate::words::{NumericalWord, PoweredWord};

/// Finds a short powered word in `gens` equal to `x` (or, with
/// `conjugate_check`, conjugate to `x` in `⟨gens⟩`).
///
/// For each word value `y` with `ord(x) | ord(y)`, the powers
/// `y^((ord(y)/ord(x))·a)` are tried for `a` coprime to `ord(x)`, ascending.
/// Running out of levels is [`Error::FrontierExhausted`].
pub fn lookup_word(gens: &GeneratorSet, x: &Permutation, opts: &LookupOptions) -> Result<LookupResult> {
    check_degree(gens, x.degree())?;
    let ambient = PermGroup::from_generators(gens.clone());
    if !ambient.has(x) {
        return Err(Error::ElementNotContained);
    }
    if x.is_identity() {
        info!("it is the identity!");
        return Ok(LookupResult {
            powered_word: PoweredWord::identity(),
            rendered: "Id($)".into(),
            element: x.clone(),
            conjugate: false,
            witness: None,
            kept_generator_indices: Vec::new(),
            levels: 0,
        });
    }

    let (kept, working) = if opts.reduce_first && !opts.conjugate_check {
        let (kept, working) = reduce_gens_for_elt(gens, x)?;
        info!("using only {} generators {:?}, out of {}", kept.len(), working.names(), gens.len());
        (kept, working)
    } else {
        ((1..=gens.len()).collect(), gens.clone())
    };

    let target_order = x.order();
    let coprime: Vec<u128> = (1..=target_order).filter(|a| a.gcd(&target_order) == 1).collect();

    let found = |word: &NumericalWord, exponent: u128, element: Permutation, witness: Option<Permutation>, level: usize| {
        let powered_word = PoweredWord::new(word.relabel(&kept), exponent as u64);
        let rendered = powered_word.render(gens.names())?;
        Ok(LookupResult {
            powered_word,
            rendered,
            element,
            conjugate: witness.is_some(),
            witness,
            kept_generator_indices: kept.clone(),
            levels: level,
        })
    };

    let mut walker = LevelWalker::new(working.gens(), opts.frontier_cap);
    loop {
        let level = walker.level();
        if opts.iteration_limit.is_some_and(|limit| level > limit) {
            return Err(Error::FrontierExhausted { level: level - 1 });
        }
        info!("{level}-th iteration");
        for (word, y) in walker.iter() {
            let order = y.order();
            if order % target_order != 0 {
                continue;
            }
            let step = order / target_order;
            for &a in &coprime {
                let exponent = step * a;
                let z = y.pow(exponent as i64);
                if &z == x {
                    info!("got a word (exact)");
                    return found(word, exponent, z, None, level);
                }
                if opts.conjugate_check {
                    if let Some(w) = are_conjugate(&ambient, &z, x, opts.element_limit)? {
                        info!("got a conjugate word");
                        return found(word, exponent, z, Some(w), level);
                    }
                }
            }
        }
        walker.descend()?;
    }
}
