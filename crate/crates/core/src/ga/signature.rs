use std::fmt;

use crate::error::{Error, Result};

/// Largest supported vector-space dimension. Blade masks fit in a `u8`.
pub const MAX_DIM: usize = 8;

/// Diagonal metric of a real Clifford algebra together with basis labels.
///
/// Basis vector `i` squares to `squares[i]` (always `+1` or `-1`). The order
/// of `labels` is the canonical blade order, and the pseudoscalar is the
/// product of all basis vectors in that order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Signature {
    squares: Vec<i8>,
    labels: Vec<String>,
}

impl Signature {
    /// `Cl(p,q)` with labels `e1..e{p+q}`; the first `p` vectors square to +1.
    pub fn new(p: usize, q: usize) -> Result<Self> {
        let labels = (1..=p + q).map(|i| format!("e{i}")).collect();
        let squares = std::iter::repeat_n(1, p).chain(std::iter::repeat_n(-1, q)).collect();
        Self::with_metric(labels, squares)
    }

    pub fn with_metric(labels: Vec<String>, squares: Vec<i8>) -> Result<Self> {
        let n = squares.len();
        if n == 0 || n > MAX_DIM {
            return Err(Error::InvalidSignature(format!(
                "dimension {n} outside 1..={MAX_DIM}"
            )));
        }
        if labels.len() != n {
            return Err(Error::InvalidSignature(format!(
                "{} labels for {n} basis vectors",
                labels.len()
            )));
        }
        if let Some(s) = squares.iter().find(|s| **s != 1 && **s != -1) {
            return Err(Error::InvalidSignature(format!(
                "basis square {s} is not +1 or -1"
            )));
        }
        for (i, l) in labels.iter().enumerate() {
            if l.is_empty() || l.contains(['^', '*', ' ']) {
                return Err(Error::InvalidSignature(format!("bad label {l:?}")));
            }
            if labels[..i].contains(l) {
                return Err(Error::InvalidSignature(format!("duplicate label {l:?}")));
            }
        }
        Ok(Self { squares, labels })
    }

    /// Parses `R(p,q)` or one of the model aliases `E2`, `M11`, `E3`, `M21`,
    /// `M31`. Aliases resolve to the conformal *model* signature.
    pub fn parse(spec: &str) -> Result<Self> {
        let spec = spec.trim();
        if let Some(target) = Self::target_of_alias(spec) {
            return target.conformal_extension();
        }
        let inner = spec
            .strip_prefix("R(")
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("unknown signature {spec:?}")))?;
        let (p, q) = inner
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("expected R(p,q), got {spec:?}")))?;
        let p = p
            .trim()
            .parse::<usize>()
            .map_err(|e| Error::Parse(format!("bad p in {spec:?}: {e}")))?;
        let q = q
            .trim()
            .parse::<usize>()
            .map_err(|e| Error::Parse(format!("bad q in {spec:?}: {e}")))?;
        Self::new(p, q)
    }

    /// Target-space signature for a model alias. Minkowski targets list the
    /// timelike vector `e0` first.
    pub fn target_of_alias(alias: &str) -> Option<Self> {
        let (labels, squares): (&[&str], &[i8]) = match alias {
            "E2" => (&["e1", "e2"], &[1, 1]),
            "E3" => (&["e1", "e2", "e3"], &[1, 1, 1]),
            "M11" => (&["e0", "e1"], &[-1, 1]),
            "M21" => (&["e0", "e1", "e2"], &[-1, 1, 1]),
            "M31" => (&["e0", "e1", "e2", "e3"], &[-1, 1, 1, 1]),
            _ => return None,
        };
        let labels = labels.iter().map(|s| s.to_string()).collect();
        Some(Self::with_metric(labels, squares.to_vec()).expect("alias tables are valid"))
    }

    /// Appends `e+` (square +1) and `e-` (square -1) to this signature.
    pub fn conformal_extension(&self) -> Result<Self> {
        let mut labels = self.labels.clone();
        let mut squares = self.squares.clone();
        for (l, s) in [("e+", 1), ("e-", -1)] {
            if labels.iter().any(|x| x == l) {
                return Err(Error::InvalidSignature(format!("label {l} already present")));
            }
            labels.push(l.to_string());
            squares.push(s);
        }
        Self::with_metric(labels, squares)
    }

    pub fn dim(&self) -> usize {
        self.squares.len()
    }

    pub fn p(&self) -> usize {
        self.squares.iter().filter(|s| **s > 0).count()
    }

    pub fn q(&self) -> usize {
        self.squares.iter().filter(|s| **s < 0).count()
    }

    #[inline]
    pub fn square(&self, i: usize) -> f64 {
        f64::from(self.squares[i])
    }

    pub fn squares(&self) -> &[i8] {
        &self.squares
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Mask of the pseudoscalar (all basis vectors).
    pub fn full_mask(&self) -> u8 {
        ((1u16 << self.dim()) - 1) as u8
    }

    /// Number of basis blades, `2^n`.
    pub fn blade_count(&self) -> usize {
        1 << self.dim()
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "R({},{})[", self.p(), self.q())?;
        for (i, (l, s)) in self.labels.iter().zip(&self.squares).enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}{}", if *s > 0 { "+" } else { "-" })?;
        }
        f.write_str("]")
    }
}
