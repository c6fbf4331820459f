//! Integer partitions and Young-diagram conjugation.

use std::fmt;

use crate::error::{Error, Result};

/// A partition: weakly decreasing positive parts. The empty partition is
/// the empty list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Panics unless `parts` is weakly decreasing and strictly positive.
    pub fn new(parts: Vec<usize>) -> Self {
        Self::try_new(parts).expect("partition parts must be weakly decreasing and positive")
    }

    pub fn try_new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::Domain("partition parts must be positive".into()));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::Domain(
                "partition parts must be weakly decreasing".into(),
            ));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The rectangle with `count` parts all equal to `part`; either being
    /// zero gives the empty partition.
    pub fn rectangle(part: usize, count: usize) -> Self {
        if part == 0 || count == 0 {
            Self::empty()
        } else {
            Partition {
                parts: vec![part; count],
            }
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The part at `index`, or 0 beyond the last part.
    pub fn part(&self, index: usize) -> usize {
        self.parts.get(index).copied().unwrap_or(0)
    }

    /// |lambda|, the number of boxes.
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The conjugate partition: column lengths of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0);
        let parts = (1..=cols)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// All partitions of `n`, parts in weakly decreasing order, generated
    /// largest-first. Used by the verification sweep and tests.
    pub fn all_of(n: usize) -> Vec<Partition> {
        fn go(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition {
                    parts: current.clone(),
                });
                return;
            }
            for part in (1..=max_part.min(remaining)).rev() {
                current.push(part);
                go(remaining - part, part, current, out);
                current.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}
