use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::words::NumericalWord;

/// One level of the word tree at a time, with the value of every word kept
/// alongside it so children cost a single product each.
pub(crate) struct LevelWalker<'a> {
    gens: &'a [Permutation],
    words: Vec<NumericalWord>,
    values: Vec<Permutation>,
    level: usize,
    cap: usize,
}

impl<'a> LevelWalker<'a> {
    /// Starts at level 1 (`[1], ..., [k]`).
    pub fn new(gens: &'a [Permutation], cap: usize) -> Self {
        LevelWalker {
            gens,
            words: (1..=gens.len() as u32).map(|j| NumericalWord::new(vec![j])).collect(),
            values: gens.to_vec(),
            level: 1,
            cap,
        }
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn iter(&self) -> impl Iterator<Item = (&NumericalWord, &Permutation)> {
        self.words.iter().zip(self.values.iter())
    }

    /// Replaces the level by its children, in parent order then letter order.
    pub fn descend(&mut self) -> Result<()> {
        let k = self.gens.len();
        let next_len = self.level + 1;
        let count = self.words.len().saturating_mul(k);
        if count.saturating_mul(next_len) > self.cap {
            return Err(Error::FrontierExhausted { level: next_len });
        }
        let mut words = Vec::with_capacity(count);
        let mut values = Vec::with_capacity(count);
        for (w, v) in self.words.iter().zip(self.values.iter()) {
            for (j, g) in self.gens.iter().enumerate() {
                words.push(w.child(j as u32 + 1));
                values.push(v.then(g));
            }
        }
        self.words = words;
        self.values = values;
        self.level = next_len;
        Ok(())
    }
}
