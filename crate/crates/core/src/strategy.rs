use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A deterministic outcome assignment: one `±1` per measurement setting.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Strategy {
    signs: Vec<i8>,
}

impl Strategy {
    pub fn new(signs: Vec<i8>) -> Result<Self> {
        if let Some(bad) = signs.iter().find(|&&s| s != 1 && s != -1) {
            return Err(Error::InvalidStrategy(format!("entry {bad} is not ±1")));
        }
        Ok(Self { signs })
    }

    pub fn all_plus(n: usize) -> Self {
        Self { signs: vec![1; n] }
    }

    /// Decodes an `n`-bit code in which bit `n-1-i` set means setting `i` is `-1`.
    pub fn from_code(code: u64, n: usize) -> Self {
        let signs = (0..n).map(|i| if (code >> (n - 1 - i)) & 1 == 1 { -1 } else { 1 }).collect();
        Self { signs }
    }

    /// Inverse of [`Strategy::from_code`]: `+1 -> 0`, `-1 -> 1`, index 0 most significant.
    pub fn code(&self) -> u64 {
        self.signs.iter().fold(0u64, |acc, &s| (acc << 1) | u64::from(s < 0))
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    pub fn plus_count(&self) -> usize {
        self.signs.iter().filter(|&&s| s > 0).count()
    }

    pub fn negated(&self) -> Self {
        Self { signs: self.signs.iter().map(|s| -s).collect() }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.signs {
            f.write_str(if s > 0 { "+" } else { "-" })?;
        }
        Ok(())
    }
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '+' => Ok(1),
                '-' | '\u{2212}' => Ok(-1),
                other => Err(Error::InvalidStrategy(format!("unexpected character {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(|signs| Self { signs })
    }
}
