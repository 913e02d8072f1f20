//! Crossing words for Klein-bottle windings.
//!
//! Each winding-1 entry contributes a single letter (`X`, `Y`, ...), each
//! winding-2 entry a primed pair (`1`, `1'`, `2`, `2'`, ...). A word uses every
//! letter once and is read cyclically. Swapping every pair must give back the
//! word up to rotation, or its reverse up to rotation. The default mode also
//! requires the word with single letters deleted to come back up to rotation
//! alone; the linear mode instead compares words without rotation.

use serde::Serialize;

use crate::error::Error;
use crate::rotation::next_permutation;

const MAX_LETTERS: usize = 10;
const SINGLES: &[&str] = &["X", "Y", "Z", "W", "U", "V", "S", "T", "R", "Q"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum WordMode {
    Cyclic,
    Linear,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Letter {
    Pair(usize, bool),
    Single(usize),
}

impl Letter {
    fn swapped(self) -> Letter {
        match self {
            Letter::Pair(n, primed) => Letter::Pair(n, !primed),
            s => s,
        }
    }

    fn render(self) -> String {
        match self {
            Letter::Pair(n, false) => format!("{}", n + 1),
            Letter::Pair(n, true) => format!("{}'", n + 1),
            Letter::Single(i) => SINGLES[i].to_string(),
        }
    }
}

fn is_rotation(a: &[Letter], b: &[Letter]) -> bool {
    a.len() == b.len() && (a.is_empty() || (0..a.len()).any(|k| a[k..].iter().chain(&a[..k]).eq(b)))
}

fn admissible(word: &[Letter], mode: WordMode) -> bool {
    let swapped: Vec<Letter> = word.iter().map(|l| l.swapped()).collect();
    let reversed: Vec<Letter> = word.iter().rev().copied().collect();
    match mode {
        WordMode::Linear => swapped == word || swapped == reversed,
        WordMode::Cyclic => {
            let skeleton: Vec<Letter> = word.iter().copied().filter(|l| matches!(l, Letter::Pair(..))).collect();
            let skeleton_swapped: Vec<Letter> = skeleton.iter().map(|l| l.swapped()).collect();
            (is_rotation(word, &swapped) || is_rotation(&reversed, &swapped))
                && is_rotation(&skeleton, &skeleton_swapped)
        }
    }
}

/// The first admissible word in enumeration order, or `None`.
pub fn klein_word_admissible(windings: &[u8], mode: WordMode) -> Result<Option<String>, Error> {
    if windings.is_empty() {
        return Err(Error::Usage("windings must be nonempty".into()));
    }
    if let Some(w) = windings.iter().find(|&&w| w != 1 && w != 2) {
        return Err(Error::Usage(format!("winding {w} is not 1 or 2")));
    }
    let singles = windings.iter().filter(|&&w| w == 1).count();
    let pairs = windings.len() - singles;
    let mut letters: Vec<Letter> = Vec::new();
    for n in 0..pairs {
        letters.push(Letter::Pair(n, false));
        letters.push(Letter::Pair(n, true));
    }
    letters.extend((0..singles).map(Letter::Single));
    if letters.len() > MAX_LETTERS {
        return Err(Error::Usage(format!("at most {MAX_LETTERS} letters are supported")));
    }
    // the first letter stays fixed since words are cyclic
    let mut rest: Vec<usize> = (1..letters.len()).collect();
    loop {
        let word: Vec<Letter> = std::iter::once(letters[0])
            .chain(rest.iter().map(|&i| letters[i]))
            .collect();
        if admissible(&word, mode) {
            return Ok(Some(word.iter().map(|l| l.render()).collect()));
        }
        if !next_permutation(&mut rest) {
            return Ok(None);
        }
    }
}
