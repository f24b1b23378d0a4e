use std::fmt;

use super::{Element, GroupEngine};
use crate::cayley::{build_ball_capped, orbit};
use crate::error::{Error, Result};

/// Radius of the source ball sampled when the source group is infinite;
/// pairs are drawn from the sub-ball of half this radius.
pub const SAMPLE_RADIUS: u32 = 6;

/// Finite sources up to this order are checked on every pair.
const FULL_PAIR_CAP: u64 = 4096;

/// A homomorphism given by the images of the source generators.
#[derive(Debug, Clone)]
pub struct Surjection {
    pub source: GroupEngine,
    pub target: GroupEngine,
    pub generator_images: Vec<Element>,
}

impl Surjection {
    pub fn new(
        source: GroupEngine,
        target: GroupEngine,
        generator_images: Vec<Element>,
    ) -> Result<Self> {
        if generator_images.len() != source.rank() {
            return Err(Error::Surjection(format!(
                "{} generator images for a source of rank {}",
                generator_images.len(),
                source.rank()
            )));
        }
        Ok(Surjection {
            source,
            target,
            generator_images,
        })
    }

    /// Image of `g`, computed by evaluating a source word for `g` on the
    /// generator images.
    pub fn apply(&self, g: &Element) -> Result<Element> {
        let word = self
            .source
            .word_of(g)
            .ok_or_else(|| Error::Surjection(format!("no word for {g} in {}", self.source)))?;
        Ok(word.iter().fold(self.target.identity(), |acc, l| {
            let img = &self.generator_images[l.generator];
            match l.sign {
                super::Sign::Pos => self.target.multiply(&acc, img),
                super::Sign::Neg => self.target.multiply(&acc, &self.target.inverse(img)),
            }
        }))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurjectionReport {
    pub generates: bool,
    pub homomorphism: bool,
    /// Number of (g, h) pairs on which φ(gh) = φ(g)φ(h) was checked.
    pub checked_pairs: usize,
    /// True when the source is infinite (or too large) and only a ball was
    /// sampled.
    pub sampled: bool,
    pub witness: Option<String>,
}

impl SurjectionReport {
    pub fn is_valid(&self) -> bool {
        self.generates && self.homomorphism
    }
}

impl fmt::Display for SurjectionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            write!(f, "valid ({} pairs checked", self.checked_pairs)?;
            if self.sampled {
                write!(f, ", sampled")?;
            }
            write!(f, ")")
        } else {
            write!(f, "invalid: {}", self.witness.as_deref().unwrap_or("?"))
        }
    }
}

/// Checks that the generator images generate the (finite) target and that
/// the induced map is a homomorphism: on all pairs for finite sources up to
/// order 4096, otherwise on pairs from the ball of radius
/// `SAMPLE_RADIUS / 2`. Never fails; problems land in the report.
pub fn check_surjection(s: &Surjection) -> SurjectionReport {
    let mut report = SurjectionReport {
        generates: false,
        homomorphism: false,
        checked_pairs: 0,
        sampled: false,
        witness: None,
    };

    let Some(order) = s.target.order() else {
        report.witness = Some(format!("target {} is infinite", s.target));
        return report;
    };
    match orbit(&s.target, &s.generator_images, order as usize + 1) {
        Ok(reached) if reached.len() as u64 == order => report.generates = true,
        Ok(reached) => {
            report.witness = Some(format!(
                "generator images reach {} of {order} target elements",
                reached.len()
            ));
            return report;
        }
        Err(e) => {
            report.witness = Some(e.to_string());
            return report;
        }
    }

    let sample = match s.source.order() {
        Some(n) if n <= FULL_PAIR_CAP => s.source.enumerate(n as usize),
        _ => {
            report.sampled = true;
            build_ball_capped(&s.source, SAMPLE_RADIUS / 2, FULL_PAIR_CAP as usize)
                .ok()
                .and_then(|b| b.elements().map(<[Element]>::to_vec))
        }
    };
    let Some(sample) = sample else {
        report.witness = Some(format!("could not enumerate source {}", s.source));
        return report;
    };

    let images: Vec<Element> = match sample.iter().map(|g| s.apply(g)).collect() {
        Ok(v) => v,
        Err(e) => {
            report.witness = Some(e.to_string());
            return report;
        }
    };
    for (g, fg) in sample.iter().zip(&images) {
        for (h, fh) in sample.iter().zip(&images) {
            let gh = s.source.multiply(g, h);
            let lhs = match s.apply(&gh) {
                Ok(x) => x,
                Err(e) => {
                    report.witness = Some(e.to_string());
                    return report;
                }
            };
            report.checked_pairs += 1;
            if lhs != s.target.multiply(fg, fh) {
                report.witness = Some(format!("φ({g}·{h}) ≠ φ({g})·φ({h})"));
                return report;
            }
        }
    }
    report.homomorphism = true;
    report
}
