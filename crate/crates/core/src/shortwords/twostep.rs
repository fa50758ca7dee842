use log::warn;

use super::reduce::check_degree;
use super::{get_short_gens, lookup_word, LookupOptions, LookupResult, SearchStatus, ShortGensOptions, ShortGensResult};
use crate::error::{Error, Result};
use crate::perm::{GeneratorSet, PermGroup, Permutation};
use crate::words::{NumericalWord, PoweredWord};

/// Short generators for `S` found through an intermediate subgroup `T`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoStepShortGens {
    /// Words in the original generators whose values `t_1, ..., t_n` generate `T`.
    pub intermediate: ShortGensResult,
    /// Words in `t_1, ..., t_n` generating `S`.
    pub nested: ShortGensResult,
    /// `nested` rewritten over the original generators.
    pub flattened: Vec<PoweredWord>,
    pub flattened_rendered: Vec<String>,
    pub status: SearchStatus,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoStepLookup {
    pub intermediate: Option<ShortGensResult>,
    pub nested: Option<LookupResult>,
    pub flattened: PoweredWord,
    pub rendered: String,
    pub element: Permutation,
}

/// Names `t1, t2, ...` for the intermediate generators.
fn intermediate_set(degree: usize, step: &ShortGensResult) -> Result<GeneratorSet> {
    let names = (1..=step.elements.len()).map(|i| format!("t{i}")).collect();
    GeneratorSet::with_names(degree, step.elements.clone(), names)
}

/// Rewrites a word in the `t`s as a word in the original generators by
/// substituting `t_i = w_i^{m_i}` letter by letter. A single-letter word
/// `t_i^e` becomes `w_i^(m_i e)`.
pub(crate) fn flatten(word: &PoweredWord, defs: &[PoweredWord]) -> PoweredWord {
    if let [t] = word.word.letters() {
        let def = &defs[*t as usize - 1];
        return PoweredWord::new(def.word.clone(), def.exponent * word.exponent);
    }
    let mut letters = Vec::new();
    for &t in word.word.letters() {
        let def = &defs[t as usize - 1];
        for _ in 0..def.exponent {
            letters.extend_from_slice(def.word.letters());
        }
    }
    PoweredWord::new(NumericalWord::new(letters), word.exponent)
}

/// Strategy for subgroups lying deep inside `⟨gens⟩`: find short generators
/// `t_i` for `T`, then short generators for `S` in terms of the `t_i`.
pub fn two_step_get_short_gens(
    gens: &GeneratorSet,
    t: &PermGroup,
    s: &PermGroup,
    opts: &ShortGensOptions,
) -> Result<TwoStepShortGens> {
    check_degree(gens, t.degree())?;
    check_degree(gens, s.degree())?;
    if !s.is_subgroup_of(t)? {
        return Err(Error::ChainViolated);
    }
    let ambient = PermGroup::from_generators(gens.clone());
    if s.order() == t.order() || t.order() == ambient.order() {
        warn!("two-step chain is not strict: |S| = {}, |T| = {}, |G| = {}", s.order(), t.order(), ambient.order());
    }

    let intermediate = get_short_gens(gens, t, opts)?;
    let tset = intermediate_set(gens.degree(), &intermediate)?;
    let nested = if intermediate.status != SearchStatus::Complete {
        ShortGensResult {
            status: SearchStatus::Unfinished,
            powered_words: Vec::new(),
            rendered: Vec::new(),
            elements: Vec::new(),
            kept_generator_indices: Vec::new(),
            levels: 0,
        }
    } else if s.equals(t)? {
        let words: Vec<PoweredWord> = (1..=tset.len() as u32)
            .map(|i| PoweredWord::new(NumericalWord::new(vec![i]), 1))
            .collect();
        ShortGensResult {
            status: SearchStatus::Complete,
            rendered: words.iter().map(|w| w.render(tset.names())).collect::<Result<_>>()?,
            powered_words: words,
            elements: tset.gens().to_vec(),
            kept_generator_indices: (1..=tset.len()).collect(),
            levels: 1,
        }
    } else {
        get_short_gens(&tset, s, opts)?
    };

    let flattened: Vec<PoweredWord> = nested
        .powered_words
        .iter()
        .map(|w| flatten(w, &intermediate.powered_words))
        .collect();
    let flattened_rendered = flattened
        .iter()
        .map(|w| w.render(gens.names()))
        .collect::<Result<_>>()?;
    let status = if intermediate.status == SearchStatus::Complete {
        nested.status
    } else {
        SearchStatus::Unfinished
    };
    Ok(TwoStepShortGens {
        intermediate,
        nested,
        flattened,
        flattened_rendered,
        status,
    })
}

/// Strategy for elements lying deep inside `⟨gens⟩`: find short generators
/// `t_i` for a subgroup `T` containing `x`, then a word for `x` in the `t_i`.
pub fn two_step_lookup_word(
    gens: &GeneratorSet,
    t: &PermGroup,
    x: &Permutation,
    short_opts: &ShortGensOptions,
    lookup_opts: &LookupOptions,
) -> Result<TwoStepLookup> {
    check_degree(gens, t.degree())?;
    check_degree(gens, x.degree())?;
    if x.is_identity() {
        return Ok(TwoStepLookup {
            intermediate: None,
            nested: None,
            flattened: PoweredWord::identity(),
            rendered: "Id($)".into(),
            element: x.clone(),
        });
    }
    if !t.has(x) {
        return Err(Error::ElementNotContained);
    }
    let intermediate = get_short_gens(gens, t, short_opts)?;
    if intermediate.status != SearchStatus::Complete {
        return Err(Error::FrontierExhausted {
            level: intermediate.levels,
        });
    }
    let tset = intermediate_set(gens.degree(), &intermediate)?;
    let nested = lookup_word(&tset, x, lookup_opts)?;
    let flattened = flatten(&nested.powered_word, &intermediate.powered_words);
    let rendered = flattened.render(gens.names())?;
    let element = nested.element.clone();
    Ok(TwoStepLookup {
        intermediate: Some(intermediate),
        nested: Some(nested),
        flattened,
        rendered,
        element,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str, n: usize) -> Permutation {
        Permutation::parse(s, n).unwrap()
    }

    #[test]
    fn klein_four_through_a4() {
        let gens = GeneratorSet::parse(4, &["(1,2)", "(1,2,3,4)"]).unwrap();
        let t = PermGroup::alternating(4);
        let s = PermGroup::from_perms(4, vec![perm("(1,2)(3,4)", 4), perm("(1,3)(2,4)", 4)]).unwrap();
        let res = two_step_get_short_gens(&gens, &t, &s, &ShortGensOptions::default()).unwrap();
        assert_eq!(res.status, SearchStatus::Complete);
        let values: Vec<_> = res.flattened.iter().map(|w| w.evaluate(&gens).unwrap()).collect();
        assert_eq!(values, res.nested.elements);
        assert!(PermGroup::from_perms(4, values).unwrap().equals(&s).unwrap());
    }

    #[test]
    fn equal_subgroups_substitute_identically() {
        let gens = GeneratorSet::parse(4, &["(1,2)", "(1,2,3,4)"]).unwrap();
        let t = PermGroup::alternating(4);
        let res = two_step_get_short_gens(&gens, &t, &t, &ShortGensOptions::default()).unwrap();
        assert_eq!(res.flattened, res.intermediate.powered_words);
    }

    #[test]
    fn trivial_s_is_empty() {
        let gens = GeneratorSet::parse(4, &["(1,2)", "(1,2,3,4)"]).unwrap();
        let res = two_step_get_short_gens(&gens, &PermGroup::alternating(4), &PermGroup::trivial(4), &ShortGensOptions::default())
            .unwrap();
        assert!(res.flattened.is_empty());
    }

    #[test]
    fn chain_violation() {
        let gens = GeneratorSet::parse(4, &["(1,2)", "(1,2,3,4)"]).unwrap();
        let s = PermGroup::from_perms(4, vec![perm("(1,2)", 4)]).unwrap();
        assert_eq!(
            two_step_get_short_gens(&gens, &PermGroup::alternating(4), &s, &ShortGensOptions::default()).unwrap_err(),
            Error::ChainViolated
        );
    }

    #[test]
    fn lookup_through_subgroup() {
        let gens = GeneratorSet::parse(6, &["(1,2)", "(1,2,3,4,5,6)"]).unwrap();
        let x = perm("(1,4)(2,5)", 6);
        let t = PermGroup::from_perms(6, vec![perm("(1,4)", 6), perm("(2,5)", 6), perm("(3,6)", 6)]).unwrap();
        let res = two_step_lookup_word(&gens, &t, &x, &ShortGensOptions::default(), &LookupOptions::default()).unwrap();
        assert_eq!(res.flattened.evaluate(&gens).unwrap(), x);

        let id = two_step_lookup_word(&gens, &t, &Permutation::identity(6), &ShortGensOptions::default(), &LookupOptions::default())
            .unwrap();
        assert_eq!(id.rendered, "Id($)");
    }
}
