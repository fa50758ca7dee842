//! Numerical words over an ordered generator set, shortlex order, the
//! leveled word-tree frontier and word rendering.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{GeneratorSet, Permutation};

/// A finite sequence of 1-based generator indices. The empty word is the
/// identity.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct NumericalWord(Vec<u32>);

impl NumericalWord {
    pub fn new(letters: Vec<u32>) -> Self {
        NumericalWord(letters)
    }

    pub fn empty() -> Self {
        NumericalWord(Vec::new())
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The child of `self` in the word tree reached by letter `letter`.
    pub fn child(&self, letter: u32) -> NumericalWord {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.extend_from_slice(&self.0);
        v.push(letter);
        NumericalWord(v)
    }

    pub fn concat(&self, other: &NumericalWord) -> NumericalWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        NumericalWord(v)
    }

    pub fn max_letter(&self) -> Option<u32> {
        self.0.iter().copied().max()
    }

    /// Letters mapped through `map` (1-based lookup).
    pub fn relabel(&self, map: &[usize]) -> NumericalWord {
        NumericalWord(self.0.iter().map(|&l| map[l as usize - 1] as u32).collect())
    }
}

impl From<Vec<u32>> for NumericalWord {
    fn from(v: Vec<u32>) -> Self {
        NumericalWord(v)
    }
}

impl fmt::Debug for NumericalWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

/// Shortlex comparison: shorter words first, then the first differing letter.
pub fn lex_compare(u: &NumericalWord, w: &NumericalWord) -> Ordering {
    u.len().cmp(&w.len()).then_with(|| u.0.cmp(&w.0))
}

impl Ord for NumericalWord {
    fn cmp(&self, other: &Self) -> Ordering {
        lex_compare(self, other)
    }
}

impl PartialOrd for NumericalWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A word together with an outer exponent; its value is `word^exponent`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PoweredWord {
    pub word: NumericalWord,
    pub exponent: u64,
}

impl PoweredWord {
    pub fn new(word: NumericalWord, exponent: u64) -> Self {
        assert!(exponent >= 1, "exponent must be positive");
        PoweredWord { word, exponent }
    }

    pub fn identity() -> Self {
        PoweredWord::new(NumericalWord::empty(), 1)
    }

    pub fn evaluate(&self, gens: &GeneratorSet) -> Result<Permutation> {
        Ok(word_to_elt(gens, &self.word)?.pow(self.exponent as i64))
    }

    pub fn render(&self, names: &[String]) -> Result<String> {
        format_word(&self.word, names, self.exponent)
    }
}

/// The flat, leveled list of words built so far, with the 1-based inclusive
/// window `[start, end]` marking the most recently generated level.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WordFrontier {
    words: Vec<NumericalWord>,
    window: Option<(usize, usize)>,
}

impl WordFrontier {
    pub fn new() -> Self {
        WordFrontier::default()
    }

    /// A frontier over arbitrary pre-built words. Requires
    /// `1 <= start <= end <= words.len()`.
    pub fn from_parts(words: Vec<NumericalWord>, start: usize, end: usize) -> Result<Self> {
        if start == 0 || start > end || end > words.len() {
            return Err(Error::IndexOutOfRange {
                letter: end as u32,
                arity: words.len(),
            });
        }
        Ok(WordFrontier {
            words,
            window: Some((start, end)),
        })
    }

    pub fn words(&self) -> &[NumericalWord] {
        &self.words
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// `(start, end)`, 1-based and inclusive.
    pub fn window_bounds(&self) -> Option<(usize, usize)> {
        self.window
    }

    pub fn window(&self) -> &[NumericalWord] {
        match self.window {
            Some((s, e)) => &self.words[s - 1..e],
            None => &[],
        }
    }

    /// Total number of letters stored.
    pub fn stored_letters(&self) -> usize {
        self.words.iter().map(NumericalWord::len).sum()
    }
}

/// Descends one level in the word tree: each window word gets the children
/// `w+[1], ..., w+[k]` appended, and the window moves to the new block. An
/// empty frontier yields `[1], ..., [k]`.
pub fn enum_words(frontier: &WordFrontier, k: usize) -> Result<WordFrontier> {
    if frontier.is_empty() {
        let words: Vec<_> = (1..=k as u32).map(|j| NumericalWord(vec![j])).collect();
        let window = if k == 0 { None } else { Some((1, k)) };
        return Ok(WordFrontier { words, window });
    }
    let (start, end) = frontier.window.expect("non-empty frontier has a window");
    if let Some(bad) = frontier.window().iter().filter_map(|w| w.max_letter()).find(|&l| l as usize > k) {
        return Err(Error::ArityMismatch {
            letter: bad,
            arity: k,
        });
    }
    let mut words = frontier.words.clone();
    words.reserve((end - start + 1) * k);
    for i in start..=end {
        for j in 1..=k as u32 {
            words.push(frontier.words[i - 1].child(j));
        }
    }
    let new_start = frontier.words.len() + 1;
    let new_end = words.len();
    Ok(WordFrontier {
        words,
        window: Some((new_start, new_end)),
    })
}

/// Left-to-right product of the indexed generators; the empty word is the
/// identity.
pub fn word_to_elt(gens: &GeneratorSet, word: &NumericalWord) -> Result<Permutation> {
    let mut elt = Permutation::identity(gens.degree());
    for &letter in word.letters() {
        let g = gens.get(letter as usize).ok_or(Error::IndexOutOfRange {
            letter,
            arity: gens.len(),
        })?;
        elt = elt.then(g);
    }
    Ok(elt)
}

/// Renders a word with runs compressed to `name^count`, letters joined by
/// `*`, and an outer exponent as `(...)^e`. A single-letter word takes the
/// exponent directly (`g2^5`); the empty word renders as `Id($)`.
pub fn format_word(word: &NumericalWord, names: &[String], exponent: u64) -> Result<String> {
    if let Some(bad) = word.letters().iter().find(|&&l| l == 0 || l as usize > names.len()) {
        return Err(Error::IndexOutOfRange {
            letter: *bad,
            arity: names.len(),
        });
    }
    if word.is_empty() {
        return Ok("Id($)".to_string());
    }
    let name = |l: u32| names[l as usize - 1].as_str();
    if word.len() == 1 {
        let n = name(word.letters()[0]);
        return Ok(if exponent > 1 {
            format!("{n}^{exponent}")
        } else {
            n.to_string()
        });
    }
    let mut parts = Vec::new();
    let letters = word.letters();
    let mut i = 0;
    while i < letters.len() {
        let mut j = i;
        while j < letters.len() && letters[j] == letters[i] {
            j += 1;
        }
        let run = j - i;
        if run == 1 {
            parts.push(name(letters[i]).to_string());
        } else {
            parts.push(format!("{}^{run}", name(letters[i])));
        }
        i = j;
    }
    let body = parts.join("*");
    Ok(if exponent > 1 {
        format!("({body})^{exponent}")
    } else {
        body
    })
}
