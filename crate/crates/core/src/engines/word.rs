use std::fmt;

/// Sign of a generator occurrence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn from_i8(v: i8) -> Option<Sign> {
        match v {
            1 => Some(Sign::Pos),
            -1 => Some(Sign::Neg),
            _ => None,
        }
    }
}

/// A generator or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub generator: usize,
    pub sign: Sign,
}

impl Letter {
    pub fn pos(generator: usize) -> Self {
        Letter {
            generator,
            sign: Sign::Pos,
        }
    }

    pub fn neg(generator: usize) -> Self {
        Letter {
            generator,
            sign: Sign::Neg,
        }
    }

    pub fn inverse(self) -> Self {
        Letter {
            generator: self.generator,
            sign: self.sign.flip(),
        }
    }

    fn cancels(self, other: Letter) -> bool {
        self.generator == other.generator && self.sign != other.sign
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // a, b, c, ... for the first 26 generators, g<i> afterwards
        if self.generator < 26 {
            write!(f, "{}", (b'a' + self.generator as u8) as char)?;
        } else {
            write!(f, "g{}", self.generator)?;
        }
        if self.sign == Sign::Neg {
            write!(f, "⁻¹")?;
        }
        Ok(())
    }
}

pub type Word = Vec<Letter>;

/// Free reduction: cancels adjacent `s s⁻¹` pairs until none remain.
pub fn free_reduce(word: &[Letter]) -> Word {
    let mut out: Word = Vec::with_capacity(word.len());
    for &l in word {
        push_reduced(&mut out, l);
    }
    out
}

/// Appends `l` to an already reduced word, cancelling against the tail.
pub fn push_reduced(word: &mut Word, l: Letter) {
    match word.last() {
        Some(&last) if last.cancels(l) => {
            word.pop();
        }
        _ => word.push(l),
    }
}

pub fn is_reduced(word: &[Letter]) -> bool {
    word.windows(2).all(|w| !w[0].cancels(w[1]))
}

pub fn invert_word(word: &[Letter]) -> Word {
    word.iter().rev().map(|l| l.inverse()).collect()
}
