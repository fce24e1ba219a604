//! Bounded relation search among integer 2×2 matrices of determinant one.
//!
//! A word in the generators and their inverses that evaluates to `±I` over
//! the integers witnesses that the generated group is not free (`-I` has
//! order two). No such word up to a given length is evidence, not proof, of
//! freeness.

use std::fmt;

use crate::error::{Error, Result};

pub type IntMat2 = [[i64; 2]; 2];

pub const SANOV_PAIR: [IntMat2; 2] = [[[1, 2], [0, 1]], [[1, 0], [2, 1]]];
pub const ELEMENTARY_PAIR: [IntMat2; 2] = [[[1, 1], [0, 1]], [[1, 0], [1, 1]]];

/// Default word length for the relation search.
pub const DEFAULT_RELATION_LENGTH: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    fn cancels(self, other: Letter) -> bool {
        self.generator == other.generator && self.inverse != other.inverse
    }
}

/// A reduced word evaluating to `sign · I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub word: Vec<Letter>,
    pub sign: i8,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.word {
            let c = (b'a' + l.generator as u8) as char;
            if l.inverse {
                write!(f, "{}", c.to_ascii_uppercase())?;
            } else {
                write!(f, "{c}")?;
            }
        }
        write!(f, " = {}I", if self.sign < 0 { "-" } else { "" })
    }
}

type Wide = [[i128; 2]; 2];

fn widen(m: &IntMat2) -> Wide {
    [[m[0][0] as i128, m[0][1] as i128], [m[1][0] as i128, m[1][1] as i128]]
}

fn mul(a: &Wide, b: &Wide) -> Option<Wide> {
    let mut out = [[0i128; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            let x = a[i][0].checked_mul(b[0][j])?;
            let y = a[i][1].checked_mul(b[1][j])?;
            out[i][j] = x.checked_add(y)?;
        }
    }
    Some(out)
}

fn signed_identity(m: &Wide) -> Option<i8> {
    match *m {
        [[1, 0], [0, 1]] => Some(1),
        [[-1, 0], [0, -1]] => Some(-1),
        _ => None,
    }
}

/// Shortest reduced word of length `1..=max_len` equal to `±I`; among words
/// of that length the first in generator order (`a, b, ..., A, B, ...` per
/// position) is returned.
pub fn find_relation(gens: &[IntMat2], max_len: usize) -> Result<Option<Relation>> {
    for g in gens {
        let det = g[0][0] as i128 * g[1][1] as i128 - g[0][1] as i128 * g[1][0] as i128;
        if det != 1 {
            return Err(Error::param(format!("integer generator {g:?} has determinant {det}")));
        }
    }
    let mut letters = Vec::new();
    for inverse in [false, true] {
        for generator in 0..gens.len() {
            letters.push(Letter { generator, inverse });
        }
    }
    let mats: Vec<Wide> = letters
        .iter()
        .map(|l| {
            let [[a, b], [c, d]] = widen(&gens[l.generator]);
            if l.inverse {
                [[d, -b], [-c, a]]
            } else {
                [[a, b], [c, d]]
            }
        })
        .collect();

    for len in 1..=max_len {
        let mut word = Vec::with_capacity(len);
        let identity = [[1, 0], [0, 1]];
        if let Some(r) = search(&letters, &mats, &mut word, &identity, len)? {
            return Ok(Some(r));
        }
    }
    Ok(None)
}

fn search(
    letters: &[Letter],
    mats: &[Wide],
    word: &mut Vec<Letter>,
    value: &Wide,
    len: usize,
) -> Result<Option<Relation>> {
    if word.len() == len {
        return Ok(signed_identity(value).map(|sign| Relation {
            word: word.clone(),
            sign,
        }));
    }
    for (l, m) in letters.iter().zip(mats) {
        if word.last().is_some_and(|&prev| prev.cancels(*l)) {
            continue;
        }
        // l·u·l⁻¹ = ±I forces u = ±I, which a shorter length already covers.
        if word.len() + 1 == len && len > 1 && word[0].cancels(*l) {
            continue;
        }
        let next = mul(value, m).ok_or(Error::WordOverflow(word.len() + 1))?;
        word.push(*l);
        let found = search(letters, mats, word, &next, len)?;
        word.pop();
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}
