use std::collections::BTreeMap;
use std::fmt;

use crate::surface_diagram::H1Class;

/// The third grading: a formal integer combination of canonical essential
/// classes. Zero coefficients are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SGrading(BTreeMap<H1Class, i64>);

impl SGrading {
    pub fn zero() -> Self {
        SGrading::default()
    }

    pub fn add(&mut self, class: &H1Class, coefficient: i64) {
        let entry = self.0.entry(class.clone()).or_insert(0);
        *entry += coefficient;
        if *entry == 0 {
            self.0.remove(class);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&H1Class, i64)> {
        self.0.iter().map(|(c, &k)| (c, k))
    }
}

/// `0`, or signed terms sorted by class vector, e.g. `+2[1,0] -1[0,1]`.
impl fmt::Display for SGrading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        for (k, (class, coefficient)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{coefficient:+}{class}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Grading {
    pub i: i64,
    pub j: i64,
    pub s: SGrading,
}

impl Grading {
    pub fn new(i: i64, j: i64, s: SGrading) -> Self {
        Grading { i, j, s }
    }

    pub fn shifted(&self, di: i64, dj: i64) -> Grading {
        Grading {
            i: self.i + di,
            j: self.j + dj,
            s: self.s.clone(),
        }
    }

    /// Grading the differential maps into.
    pub fn below(&self) -> Grading {
        self.shifted(-2, 0)
    }

    pub fn above(&self) -> Grading {
        self.shifted(2, 0)
    }
}

impl fmt::Display for Grading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.i, self.j, self.s)
    }
}
