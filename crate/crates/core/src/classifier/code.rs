use serde::{Deserialize, Serialize};

use crate::configuration::{Chirotope, Configuration};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// `(σ₁, σ₂, σ₃, σ₆)`: how many points leave a cyclic, bicomponent,
/// tricomponent or icosahedral 6-configuration when deleted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DerivativeCode(pub [usize; 4]);

impl DerivativeCode {
    pub fn sigma1(&self) -> usize {
        self.0[0]
    }

    pub fn from_deltas(deltas: &[usize]) -> Self {
        let mut s = [0usize; 4];
        for &d in deltas {
            let slot = match d {
                1 => 0,
                2 => 1,
                3 => 2,
                _ => 3,
            };
            s[slot] += 1;
        }
        DerivativeCode(s)
    }

    /// The matching row of the derivative-code table, if any.
    pub fn table_row(&self) -> Option<&'static TableRow> {
        CODE_TABLE.iter().find(|r| r.sigma == self.0)
    }
}

impl std::fmt::Display for DerivativeCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let [a, b, c, d] = self.0;
        write!(f, "({a},{b},{c},{d})")
    }
}

/// One L-deformation class of simple 7-configurations with its spectrum.
#[derive(Debug)]
pub struct TableRow {
    pub sigma: [usize; 4],
    pub spectrum: [usize; 5],
}

/// The eleven derivative codes of simple 7-configurations and their
/// polygonal spectra `(f₃, …, f₇)`.
pub const CODE_TABLE: [TableRow; 11] = [
    TableRow { sigma: [7, 0, 0, 0], spectrum: [7, 14, 0, 0, 1] },
    TableRow { sigma: [3, 4, 0, 0], spectrum: [7, 13, 1, 1, 0] },
    TableRow { sigma: [2, 2, 3, 0], spectrum: [8, 11, 2, 1, 0] },
    TableRow { sigma: [1, 2, 2, 2], spectrum: [11, 5, 5, 1, 0] },
    TableRow { sigma: [1, 0, 6, 0], spectrum: [9, 9, 3, 1, 0] },
    TableRow { sigma: [1, 6, 0, 0], spectrum: [7, 12, 3, 0, 0] },
    TableRow { sigma: [1, 4, 2, 0], spectrum: [8, 10, 4, 0, 0] },
    TableRow { sigma: [1, 2, 4, 0], spectrum: [9, 8, 5, 0, 0] },
    TableRow { sigma: [0, 4, 3, 0], spectrum: [8, 10, 4, 0, 0] },
    TableRow { sigma: [0, 6, 1, 0], spectrum: [7, 12, 3, 0, 0] },
    TableRow { sigma: [0, 3, 3, 1], spectrum: [10, 6, 6, 0, 0] },
];

/// `δ(p)` for every label of a simple 7-configuration.
pub fn deltas<T: Scalar>(c: &Configuration<T>) -> Result<Vec<usize>> {
    if c.len() != 7 {
        return Err(Error::WrongSize { expected: "7", got: c.len() });
    }
    c.require_simple()?;
    let chi = Chirotope::new(c);
    (0..7)
        .map(|p| {
            let rest: Vec<usize> = (0..7).filter(|&q| q != p).collect();
            match chi.adjacency_graph(&rest).component_count() {
                k @ (1 | 2 | 3 | 6) => Ok(k),
                k => Err(Error::InvalidComponentCount(k)),
            }
        })
        .collect()
}

pub fn derivative_code<T: Scalar>(c: &Configuration<T>) -> Result<DerivativeCode> {
    let code = DerivativeCode::from_deltas(&deltas(c)?);
    if code.table_row().is_none() {
        return Err(Error::UnknownCode(code.0));
    }
    Ok(code)
}
