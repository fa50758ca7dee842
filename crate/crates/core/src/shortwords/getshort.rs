use log::info;

use super::reduce::{check_degree, reduce_gens_for_group};
use super::walker::LevelWalker;
use super::{SearchStatus, ShortGensOptions, ShortGensResult};
use crate::error::{Error, Result};
use crate::perm::{GeneratorSet, PermGroup, Permutation};
use crate::words::PoweredWord;

struct Found {
    words: Vec<PoweredWord>,
    elements: Vec<Permutation>,
    subgroup: PermGroup,
}

impl Found {
    /// Records `value` if it lies in the target but outside the subgroup found
    /// so far. Returns true when it was recorded.
    fn offer(&mut self, target: &PermGroup, word: PoweredWord, value: Permutation) -> bool {
        if self.subgroup.has(&value) || !target.has(&value) {
            return false;
        }
        self.subgroup = self.subgroup.adjoin(&value).expect("degree checked");
        self.words.push(word);
        self.elements.push(value);
        true
    }

    fn done(&self, target: &PermGroup) -> bool {
        // the found subgroup always lies inside the target
        self.subgroup.order() == target.order()
    }
}

/// Finds powered words in `gens` whose values generate `target`.
///
/// Words are tried in shortlex order; for each word value `y` the powers
/// `y^1, y^2, ...` are scanned upwards (or, with an order restriction `O`,
/// `y^(ord(y)/o)` for each `o ∈ O` dividing `ord(y)`, ascending) and a power
/// is kept when it lies in the target but outside the subgroup generated so
/// far. Reaching `iteration_limit` levels returns the partial list with
/// [`SearchStatus::Unfinished`].
pub fn get_short_gens(
    gens: &GeneratorSet,
    target: &PermGroup,
    opts: &ShortGensOptions,
) -> Result<ShortGensResult> {
    check_degree(gens, target.degree())?;
    let exclude = opts.exclude.as_ref();
    if let Some(e) = exclude {
        check_degree(gens, e.degree())?;
    }
    let mut cover: Vec<Permutation> = gens.gens().to_vec();
    if let Some(e) = exclude {
        cover.extend(e.generators().gens().iter().cloned());
    }
    if !target.is_subgroup_of(&PermGroup::from_perms(gens.degree(), cover)?)? {
        return Err(Error::TargetNotCovered);
    }

    let (kept, working) = if opts.reduce_first {
        let (kept, working) = reduce_gens_for_group(gens, target, exclude)?;
        info!("using only {} generators {:?}, out of {}", kept.len(), working.names(), gens.len());
        (kept, working)
    } else {
        ((1..=gens.len()).collect(), gens.clone())
    };

    let seed = match exclude {
        Some(e) => target.intersection(e, opts.element_limit)?,
        None => PermGroup::trivial(gens.degree()),
    };
    let mut found = Found {
        words: Vec::new(),
        elements: Vec::new(),
        subgroup: seed,
    };

    let mut restriction = opts.order_restriction.clone();
    if let Some(r) = restriction.as_mut() {
        r.sort_unstable();
        r.dedup();
    }

    let finish = |found: Found, status: SearchStatus, levels: usize| -> Result<ShortGensResult> {
        let (words, elements) = if status == SearchStatus::Complete && opts.reduce_more && !found.words.is_empty() {
            let found_set = GeneratorSet::new(gens.degree(), found.elements.clone())?;
            let (keep, _) = reduce_gens_for_group(&found_set, target, exclude)?;
            info!("resulting set has {} generators, out of {}", keep.len(), found.words.len());
            (
                keep.iter().map(|&i| found.words[i - 1].clone()).collect::<Vec<_>>(),
                keep.iter().map(|&i| found.elements[i - 1].clone()).collect(),
            )
        } else {
            (found.words, found.elements)
        };
        let rendered = words
            .iter()
            .map(|w| w.render(gens.names()))
            .collect::<Result<Vec<_>>>()?;
        Ok(ShortGensResult {
            status,
            powered_words: words,
            rendered,
            elements,
            kept_generator_indices: kept.clone(),
            levels,
        })
    };

    if found.done(target) {
        return finish(found, SearchStatus::Complete, 0);
    }

    let mut walker = LevelWalker::new(working.gens(), opts.frontier_cap);
    loop {
        let level = walker.level();
        if opts.iteration_limit.is_some_and(|limit| level > limit) {
            info!("couldn't generate group within {} levels", level - 1);
            return finish(found, SearchStatus::Unfinished, level - 1);
        }
        if working.len() == 1 && (level - 1) as u128 >= working.gens()[0].order() {
            return Err(Error::SingleGeneratorExhausted { levels: level - 1 });
        }
        info!("{level}-th iteration");

        for (word, y) in walker.iter() {
            let original = word.relabel(&kept);
            let order = y.order();
            match &restriction {
                None => {
                    let mut power = y.clone();
                    for m in 1..order {
                        if !found.subgroup.has(&power) && target.has(&power) {
                            found.offer(target, PoweredWord::new(original.clone(), m as u64), power);
                            break;
                        }
                        power = power.then(y);
                    }
                }
                Some(orders) => {
                    for &o in orders {
                        if o == 0 || order % o as u128 != 0 {
                            continue;
                        }
                        let m = (order / o as u128) as u64;
                        let power = y.pow(m as i64);
                        if found.offer(target, PoweredWord::new(original.clone(), m), power) && found.done(target) {
                            break;
                        }
                    }
                }
            }
            if found.done(target) {
                info!("got a generating set");
                return finish(found, SearchStatus::Complete, level);
            }
        }
        walker.descend()?;
    }
}
