//! Orthogonal-vectors instances.

use std::fmt;

use crate::error::{Error, Result};

/// One 0/1 vector.
pub type BitVector = Vec<bool>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OvMode {
    /// Find `a` in A and `b` in B with `a · b = 0`.
    TwoSet,
    /// Find `i != j` with `a_i · a_j = 0`.
    SingleSet,
}

impl OvMode {
    pub fn name(self) -> &'static str {
        match self {
            OvMode::TwoSet => "TWO_SET",
            OvMode::SingleSet => "SINGLE_SET",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "TWO_SET" => Some(OvMode::TwoSet),
            "SINGLE_SET" => Some(OvMode::SingleSet),
            _ => None,
        }
    }
}

impl fmt::Display for OvMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A set (or two equally sized sets) of `d`-dimensional 0/1 vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OvInstance {
    mode: OvMode,
    d: usize,
    a: Vec<BitVector>,
    /// Empty in single-set mode.
    b: Vec<BitVector>,
}

fn check_lengths(d: usize, vs: &[BitVector], set: &str) -> Result<()> {
    match vs.iter().position(|v| v.len() != d) {
        Some(i) => Err(Error::usage(format!(
            "vector {} of {set} has length {}, expected {d}",
            i + 1,
            vs[i].len()
        ))),
        None => Ok(()),
    }
}

impl OvInstance {
    pub fn two_set(d: usize, a: Vec<BitVector>, b: Vec<BitVector>) -> Result<Self> {
        if a.is_empty() || a.len() != b.len() {
            return Err(Error::usage(format!(
                "two-set instance needs |A| = |B| >= 1, got {} and {}",
                a.len(),
                b.len()
            )));
        }
        check_lengths(d, &a, "A")?;
        check_lengths(d, &b, "B")?;
        Ok(OvInstance {
            mode: OvMode::TwoSet,
            d,
            a,
            b,
        })
    }

    pub fn single_set(d: usize, a: Vec<BitVector>) -> Result<Self> {
        if a.is_empty() {
            return Err(Error::usage("single-set instance needs at least one vector"));
        }
        check_lengths(d, &a, "A")?;
        Ok(OvInstance {
            mode: OvMode::SingleSet,
            d,
            a,
            b: Vec::new(),
        })
    }

    pub fn mode(&self) -> OvMode {
        self.mode
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// Vectors per set.
    pub fn n(&self) -> usize {
        self.a.len()
    }

    pub fn a(&self) -> &[BitVector] {
        &self.a
    }

    /// Second set; empty in single-set mode.
    pub fn b(&self) -> &[BitVector] {
        &self.b
    }

    pub(crate) fn expect_mode(&self, mode: OvMode) -> Result<()> {
        if self.mode != mode {
            return Err(Error::usage(format!("expected a {mode} instance, got {}", self.mode)));
        }
        Ok(())
    }
}

pub fn orthogonal(u: &[bool], v: &[bool]) -> bool {
    !u.iter().zip(v).any(|(&x, &y)| x && y)
}

/// Appends `(1, 0)` to every `a` and `(0, 1)` to every `b`.
pub fn pad_two_set(inst: &OvInstance) -> Result<OvInstance> {
    inst.expect_mode(OvMode::TwoSet)?;
    let pad = |vs: &[BitVector], tail: [bool; 2]| -> Vec<BitVector> {
        vs.iter().map(|v| v.iter().copied().chain(tail).collect()).collect()
    };
    OvInstance::two_set(inst.d + 2, pad(&inst.a, [true, false]), pad(&inst.b, [false, true]))
}

/// Appends the all-ones vector unless some vector already is all ones.
pub fn augment_all_ones(inst: &OvInstance) -> Result<OvInstance> {
    inst.expect_mode(OvMode::SingleSet)?;
    let mut a = inst.a.clone();
    if !a.iter().any(|v| v.iter().all(|&x| x)) {
        a.push(vec![true; inst.d]);
    }
    OvInstance::single_set(inst.d, a)
}

/// Makes the first and the last vector all ones, inserting where needed.
/// The staircases of G'(A) run in opposite index directions, so each end
/// needs its own all-ones vector.
pub fn augment_all_ones_both_ends(inst: &OvInstance) -> Result<OvInstance> {
    inst.expect_mode(OvMode::SingleSet)?;
    let ones = |v: &BitVector| v.iter().all(|&x| x);
    let mut a = inst.a.clone();
    if !ones(&a[0]) {
        a.insert(0, vec![true; inst.d]);
    }
    if !ones(&a[a.len() - 1]) {
        a.push(vec![true; inst.d]);
    }
    OvInstance::single_set(inst.d, a)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bits(s: &str) -> BitVector {
        s.chars().map(|c| c == '1').collect()
    }

    #[test]
    fn padding() {
        let p = pad_two_set(&OvInstance::two_set(1, vec![bits("1")], vec![bits("1")]).unwrap()).unwrap();
        assert_eq!(p.a(), &[bits("110")]);
        assert_eq!(p.b(), &[bits("101")]);
        let q = pad_two_set(&OvInstance::two_set(2, vec![bits("10")], vec![bits("01")]).unwrap()).unwrap();
        assert!(orthogonal(&q.a()[0], &q.b()[0]));
        let z = pad_two_set(&OvInstance::two_set(0, vec![vec![]], vec![vec![]]).unwrap()).unwrap();
        assert_eq!((z.d(), z.a()[0].clone(), z.b()[0].clone()), (2, bits("10"), bits("01")));
    }

    #[test]
    fn all_ones_augmentation() {
        let s = |v: &[&str]| OvInstance::single_set(2, v.iter().map(|x| bits(x)).collect()).unwrap();
        assert_eq!(augment_all_ones(&s(&["11"])).unwrap(), s(&["11"]));
        assert_eq!(augment_all_ones(&s(&["01"])).unwrap(), s(&["01", "11"]));
        assert_eq!(augment_all_ones(&s(&["00"])).unwrap(), s(&["00", "11"]));
        assert_eq!(augment_all_ones_both_ends(&s(&["01"])).unwrap(), s(&["11", "01", "11"]));
        assert_eq!(
            augment_all_ones_both_ends(&s(&["11", "01"])).unwrap(),
            s(&["11", "01", "11"])
        );
        assert_eq!(augment_all_ones_both_ends(&s(&["11"])).unwrap(), s(&["11"]));
    }

    #[test]
    fn validation() {
        assert!(OvInstance::two_set(1, vec![bits("1")], vec![]).is_err());
        assert!(OvInstance::single_set(2, vec![bits("1")]).is_err());
        assert!(pad_two_set(&OvInstance::single_set(1, vec![bits("1")]).unwrap()).is_err());
    }
}
