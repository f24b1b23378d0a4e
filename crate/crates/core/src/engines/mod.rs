//! Groups with canonical normal forms.
//!
//! Every engine exposes an identity, right multiplication by a generator
//! letter, full multiplication and inversion. Two elements are equal exactly
//! when their [`Element`] values are equal, which is what lets the Cayley
//! ball builder deduplicate vertices with a hash map.

mod spec;
mod surjection;
pub mod table;
pub mod word;

use std::fmt;
use std::sync::Arc;

pub use spec::parse_engine_spec;
pub use surjection::{check_surjection, Surjection, SurjectionReport, SAMPLE_RADIUS};
pub use table::FiniteTable;
pub use word::{free_reduce, Letter, Sign, Word};

use crate::error::{Error, Result};

/// Canonical normal form of a group element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    /// Reduced word in a free group.
    Word(Word),
    /// Residue in `[0, n)` for `ℤ/n`, or an integer for `ℤ`.
    Int(i64),
    /// Row index into a multiplication table.
    Index(u32),
    /// `(a, b, c)` in the Heisenberg group mod p.
    Triple(u32, u32, u32),
    /// Coordinates in a direct product.
    Pair(Box<Element>, Box<Element>),
    /// Alternating non-identity syllables of a free product, tagged by factor
    /// (0 = left, 1 = right).
    Syllables(Vec<(u8, Element)>),
}

impl Element {
    pub fn pair(a: Element, b: Element) -> Element {
        Element::Pair(Box::new(a), Box::new(b))
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Word(w) if w.is_empty() => write!(f, "ε"),
            Element::Word(w) => {
                for l in w {
                    write!(f, "{l}")?;
                }
                Ok(())
            }
            Element::Int(k) => write!(f, "{k}"),
            Element::Index(i) => write!(f, "#{i}"),
            Element::Triple(a, b, c) => write!(f, "({a},{b},{c})"),
            Element::Pair(a, b) => write!(f, "({a}; {b})"),
            Element::Syllables(s) if s.is_empty() => write!(f, "ε"),
            Element::Syllables(s) => {
                for (i, (side, e)) in s.iter().enumerate() {
                    if i > 0 {
                        write!(f, "·")?;
                    }
                    write!(f, "{}[{e}]", if *side == 0 { "L" } else { "R" })?;
                }
                Ok(())
            }
        }
    }
}

/// A finitely generated group with decidable normal forms.
///
/// Engines are immutable; product engines share their factors through `Arc`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupEngine {
    Free {
        rank: usize,
    },
    /// `modulus == 0` is the infinite cyclic group.
    Cyclic {
        modulus: u64,
    },
    Table(Arc<FiniteTable>),
    Heisenberg {
        p: u32,
    },
    FreeProduct(Arc<GroupEngine>, Arc<GroupEngine>),
    DirectProduct(Arc<GroupEngine>, Arc<GroupEngine>),
}

/// Kind tag used in reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EngineKind {
    Free,
    Cyclic,
    FiniteTable,
    HeisenbergP,
    FreeProduct,
    DirectProduct,
}

pub fn engine_free(rank: usize) -> Result<GroupEngine> {
    if rank == 0 {
        return Err(Error::InvalidEngine(
            "free group rank must be at least 1".into(),
        ));
    }
    Ok(GroupEngine::Free { rank })
}

pub fn engine_cyclic(modulus: u64) -> GroupEngine {
    GroupEngine::Cyclic { modulus }
}

pub fn engine_finite_table(table: FiniteTable) -> GroupEngine {
    GroupEngine::Table(Arc::new(table))
}

pub fn engine_heisenberg_p(p: u32) -> Result<GroupEngine> {
    if p == 2 || !is_prime(p as u64) {
        return Err(Error::InvalidEngine(format!(
            "p must be an odd prime (got {p})"
        )));
    }
    Ok(GroupEngine::Heisenberg { p })
}

pub fn engine_free_product(left: GroupEngine, right: GroupEngine) -> GroupEngine {
    GroupEngine::FreeProduct(Arc::new(left), Arc::new(right))
}

pub fn engine_direct_product(left: GroupEngine, right: GroupEngine) -> GroupEngine {
    GroupEngine::DirectProduct(Arc::new(left), Arc::new(right))
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl GroupEngine {
    pub fn kind(&self) -> EngineKind {
        match self {
            GroupEngine::Free { .. } => EngineKind::Free,
            GroupEngine::Cyclic { .. } => EngineKind::Cyclic,
            GroupEngine::Table(_) => EngineKind::FiniteTable,
            GroupEngine::Heisenberg { .. } => EngineKind::HeisenbergP,
            GroupEngine::FreeProduct(..) => EngineKind::FreeProduct,
            GroupEngine::DirectProduct(..) => EngineKind::DirectProduct,
        }
    }

    /// Number of generators. Product engines list the left factor's
    /// generators first.
    pub fn rank(&self) -> usize {
        match self {
            GroupEngine::Free { rank } => *rank,
            GroupEngine::Cyclic { .. } => 1,
            GroupEngine::Table(t) => t.generators().len(),
            GroupEngine::Heisenberg { .. } => 2,
            GroupEngine::FreeProduct(a, b) | GroupEngine::DirectProduct(a, b) => {
                a.rank() + b.rank()
            }
        }
    }

    /// Group order, `None` when infinite.
    pub fn order(&self) -> Option<u64> {
        match self {
            GroupEngine::Free { .. } => None,
            GroupEngine::Cyclic { modulus: 0 } => None,
            GroupEngine::Cyclic { modulus } => Some(*modulus),
            GroupEngine::Table(t) => Some(t.order() as u64),
            GroupEngine::Heisenberg { p } => Some((*p as u64).pow(3)),
            GroupEngine::DirectProduct(a, b) => Some(a.order()?.checked_mul(b.order()?)?),
            GroupEngine::FreeProduct(a, b) => match (a.order()?, b.order()?) {
                (1, n) | (n, 1) => Some(n),
                _ => None,
            },
        }
    }

    pub fn is_finite(&self) -> bool {
        self.order().is_some()
    }

    pub fn identity(&self) -> Element {
        match self {
            GroupEngine::Free { .. } => Element::Word(Vec::new()),
            GroupEngine::Cyclic { .. } => Element::Int(0),
            GroupEngine::Table(t) => Element::Index(t.identity()),
            GroupEngine::Heisenberg { .. } => Element::Triple(0, 0, 0),
            GroupEngine::DirectProduct(a, b) => Element::pair(a.identity(), b.identity()),
            GroupEngine::FreeProduct(..) => Element::Syllables(Vec::new()),
        }
    }

    pub fn is_identity(&self, e: &Element) -> bool {
        *e == self.identity()
    }

    /// The element represented by the generator (positive letter) `i`.
    pub fn generator(&self, i: usize) -> Element {
        assert!(i < self.rank(), "generator {i} out of range");
        self.mul_letter(&self.identity(), Letter::pos(i))
    }

    pub fn generators(&self) -> Vec<Element> {
        (0..self.rank()).map(|i| self.generator(i)).collect()
    }

    /// Right multiplication `g · s^±1`.
    pub fn mul_letter(&self, g: &Element, l: Letter) -> Element {
        debug_assert!(l.generator < self.rank());
        match (self, g) {
            (GroupEngine::Free { .. }, Element::Word(w)) => {
                let mut w = w.clone();
                word::push_reduced(&mut w, l);
                Element::Word(w)
            }
            (GroupEngine::Cyclic { modulus }, Element::Int(k)) => {
                Element::Int(cyclic_add(*modulus, *k, l.sign.as_i8() as i64))
            }
            (GroupEngine::Table(t), Element::Index(i)) => {
                let s = t.generators()[l.generator];
                let s = match l.sign {
                    Sign::Pos => s,
                    Sign::Neg => t.inverse(s),
                };
                Element::Index(t.multiply(*i, s))
            }
            (GroupEngine::Heisenberg { p }, Element::Triple(..)) => {
                let gen = match l.generator {
                    0 => Element::Triple(1, 0, 0),
                    _ => Element::Triple(0, 1, 0),
                };
                let s = match l.sign {
                    Sign::Pos => gen,
                    Sign::Neg => heis_inverse(*p, &gen),
                };
                heis_mul(*p, g, &s)
            }
            (GroupEngine::DirectProduct(a, b), Element::Pair(x, y)) => {
                if l.generator < a.rank() {
                    Element::pair(a.mul_letter(x, l), (**y).clone())
                } else {
                    let l = Letter {
                        generator: l.generator - a.rank(),
                        sign: l.sign,
                    };
                    Element::pair((**x).clone(), b.mul_letter(y, l))
                }
            }
            (GroupEngine::FreeProduct(a, b), Element::Syllables(s)) => {
                let (side, factor, local) = if l.generator < a.rank() {
                    (0u8, a, l)
                } else {
                    let local = Letter {
                        generator: l.generator - a.rank(),
                        sign: l.sign,
                    };
                    (1u8, b, local)
                };
                let mut s = s.clone();
                let letter_elem = factor.mul_letter(&factor.identity(), local);
                push_syllable(a, b, &mut s, side, letter_elem);
                Element::Syllables(s)
            }
            _ => panic!("element {g} does not belong to this engine"),
        }
    }

    pub fn multiply(&self, g: &Element, h: &Element) -> Element {
        match (self, g, h) {
            (GroupEngine::Free { .. }, Element::Word(u), Element::Word(v)) => {
                let mut w = u.clone();
                for &l in v {
                    word::push_reduced(&mut w, l);
                }
                Element::Word(w)
            }
            (GroupEngine::Cyclic { modulus }, Element::Int(a), Element::Int(b)) => {
                Element::Int(cyclic_add(*modulus, *a, *b))
            }
            (GroupEngine::Table(t), Element::Index(a), Element::Index(b)) => {
                Element::Index(t.multiply(*a, *b))
            }
            (GroupEngine::Heisenberg { p }, Element::Triple(..), Element::Triple(..)) => {
                heis_mul(*p, g, h)
            }
            (GroupEngine::DirectProduct(a, b), Element::Pair(x1, y1), Element::Pair(x2, y2)) => {
                Element::pair(a.multiply(x1, x2), b.multiply(y1, y2))
            }
            (GroupEngine::FreeProduct(a, b), Element::Syllables(s1), Element::Syllables(s2)) => {
                let mut s = s1.clone();
                for (side, e) in s2 {
                    push_syllable(a, b, &mut s, *side, e.clone());
                }
                Element::Syllables(s)
            }
            _ => panic!("elements {g}, {h} do not belong to this engine"),
        }
    }

    pub fn inverse(&self, g: &Element) -> Element {
        match (self, g) {
            (GroupEngine::Free { .. }, Element::Word(w)) => Element::Word(word::invert_word(w)),
            (GroupEngine::Cyclic { modulus }, Element::Int(k)) => {
                Element::Int(cyclic_add(*modulus, 0, -*k))
            }
            (GroupEngine::Table(t), Element::Index(i)) => Element::Index(t.inverse(*i)),
            (GroupEngine::Heisenberg { p }, Element::Triple(..)) => heis_inverse(*p, g),
            (GroupEngine::DirectProduct(a, b), Element::Pair(x, y)) => {
                Element::pair(a.inverse(x), b.inverse(y))
            }
            (GroupEngine::FreeProduct(a, b), Element::Syllables(s)) => Element::Syllables(
                s.iter()
                    .rev()
                    .map(|(side, e)| {
                        let f = if *side == 0 { a } else { b };
                        (*side, f.inverse(e))
                    })
                    .collect(),
            ),
            _ => panic!("element {g} does not belong to this engine"),
        }
    }

    /// Evaluates a word in the generators.
    pub fn evaluate(&self, word: &[Letter]) -> Element {
        word.iter()
            .fold(self.identity(), |g, &l| self.mul_letter(&g, l))
    }

    /// Some word in the generators that evaluates to `g`. `None` when `g` is
    /// not reachable (a table whose generators do not generate it).
    pub fn word_of(&self, g: &Element) -> Option<Word> {
        let shift = |w: Word, by: usize| -> Word {
            w.into_iter()
                .map(|l| Letter {
                    generator: l.generator + by,
                    sign: l.sign,
                })
                .collect()
        };
        let power = |gen: usize, k: i64| -> Word {
            let l = if k >= 0 {
                Letter::pos(gen)
            } else {
                Letter::neg(gen)
            };
            vec![l; k.unsigned_abs() as usize]
        };
        match (self, g) {
            (GroupEngine::Free { .. }, Element::Word(w)) => Some(w.clone()),
            (GroupEngine::Cyclic { .. }, Element::Int(k)) => Some(power(0, *k)),
            (GroupEngine::Heisenberg { p }, Element::Triple(a, b, c)) => {
                // x^a y^b = (a, b, ab); the commutator x y x⁻¹ y⁻¹ is (0, 0, 1)
                let p = *p as i64;
                let (a, b, c) = (*a as i64, *b as i64, *c as i64);
                let mut w = power(0, a);
                w.extend(power(1, b));
                let commutator = [
                    Letter::pos(0),
                    Letter::pos(1),
                    Letter::neg(0),
                    Letter::neg(1),
                ];
                for _ in 0..(c - a * b).rem_euclid(p) {
                    w.extend_from_slice(&commutator);
                }
                Some(w)
            }
            (GroupEngine::Table(t), Element::Index(_)) => {
                let ball =
                    crate::cayley::build_full_graph(self, &self.generators(), t.order()).ok()?;
                let v = ball.index_of(g)?;
                crate::cayley::spanning_word(&ball, v)
            }
            (GroupEngine::DirectProduct(a, b), Element::Pair(x, y)) => {
                let mut w = a.word_of(x)?;
                w.extend(shift(b.word_of(y)?, a.rank()));
                Some(w)
            }
            (GroupEngine::FreeProduct(a, b), Element::Syllables(s)) => {
                let mut w = Vec::new();
                for (side, e) in s {
                    if *side == 0 {
                        w.extend(a.word_of(e)?);
                    } else {
                        w.extend(shift(b.word_of(e)?, a.rank()));
                    }
                }
                Some(w)
            }
            _ => None,
        }
    }

    /// Word length computed from the normal form alone, for engines where a
    /// closed form exists (free, cyclic, and products of such). Serves as an
    /// oracle independent of breadth-first search.
    pub fn closed_form_length(&self, g: &Element) -> Option<u64> {
        match (self, g) {
            (GroupEngine::Free { .. }, Element::Word(w)) => Some(w.len() as u64),
            (GroupEngine::Cyclic { modulus: 0 }, Element::Int(k)) => Some(k.unsigned_abs()),
            (GroupEngine::Cyclic { modulus }, Element::Int(k)) => {
                let k = *k as u64;
                Some(k.min(modulus - k))
            }
            (GroupEngine::DirectProduct(a, b), Element::Pair(x, y)) => {
                Some(a.closed_form_length(x)? + b.closed_form_length(y)?)
            }
            (GroupEngine::FreeProduct(a, b), Element::Syllables(s)) => {
                s.iter().try_fold(0u64, |acc, (side, e)| {
                    let f = if *side == 0 { a } else { b };
                    Some(acc + f.closed_form_length(e)?)
                })
            }
            _ => None,
        }
    }

    /// Closed-form word-metric distance `|g⁻¹h|`.
    pub fn closed_form_distance(&self, g: &Element, h: &Element) -> Option<u64> {
        self.closed_form_length(&self.multiply(&self.inverse(g), h))
    }

    /// All elements of a finite engine, in breadth-first order from the
    /// identity. Returns `None` for infinite engines or when `cap` is hit.
    pub fn enumerate(&self, cap: usize) -> Option<Vec<Element>> {
        let order = self.order()?;
        if order as usize > cap {
            return None;
        }
        let gens = self.generators();
        crate::cayley::orbit(self, &gens, cap).ok()
    }
}

fn cyclic_add(modulus: u64, a: i64, b: i64) -> i64 {
    if modulus == 0 {
        a + b
    } else {
        (a + b).rem_euclid(modulus as i64)
    }
}

fn heis_mul(p: u32, g: &Element, h: &Element) -> Element {
    let (Element::Triple(a1, b1, c1), Element::Triple(a2, b2, c2)) = (g, h) else {
        unreachable!()
    };
    let p = p as u64;
    let (a1, b1, c1, a2, b2, c2) = (
        *a1 as u64, *b1 as u64, *c1 as u64, *a2 as u64, *b2 as u64, *c2 as u64,
    );
    Element::Triple(
        ((a1 + a2) % p) as u32,
        ((b1 + b2) % p) as u32,
        ((c1 + c2 + a1 * b2) % p) as u32,
    )
}

/// `(a, b, c)⁻¹ = (−a, −b, ab − c)`.
fn heis_inverse(p: u32, g: &Element) -> Element {
    let Element::Triple(a, b, c) = g else {
        unreachable!()
    };
    let p = p as u64;
    let (a, b, c) = (*a as u64, *b as u64, *c as u64);
    Element::Triple(
        ((p - a) % p) as u32,
        ((p - b) % p) as u32,
        ((a * b % p + p - c) % p) as u32,
    )
}

/// Appends a syllable to a free-product normal form, merging with the last
/// syllable when both come from the same factor and dropping identities.
fn push_syllable(
    left: &GroupEngine,
    right: &GroupEngine,
    s: &mut Vec<(u8, Element)>,
    side: u8,
    e: Element,
) {
    let factor = if side == 0 { left } else { right };
    if factor.is_identity(&e) {
        return;
    }
    match s.last_mut() {
        Some((last_side, last)) if *last_side == side => {
            let merged = factor.multiply(last, &e);
            if factor.is_identity(&merged) {
                s.pop();
            } else {
                *last = merged;
            }
        }
        _ => s.push((side, e)),
    }
}
