use serde::{Deserialize, Serialize};

use crate::configuration::{adjacency_graph, Configuration};
use crate::error::{Error, Result};
use crate::geometry::{conic_through5, side_of_conic, Side};
use crate::scalar::Scalar;

/// Deformation class of a simple 6-configuration: the number of components
/// of its adjacency graph (cyclic, bicomponent, tricomponent, icosahedral).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SixClass(pub usize);

impl SixClass {
    pub fn name(self) -> &'static str {
        match self.0 {
            1 => "cyclic",
            2 => "bicomponent",
            3 => "tricomponent",
            6 => "icosahedral",
            _ => "invalid",
        }
    }
}

pub fn six_class<T: Scalar>(c: &Configuration<T>) -> Result<SixClass> {
    if c.len() != 6 {
        return Err(Error::WrongSize { expected: "6", got: c.len() });
    }
    let k = adjacency_graph(c)?.component_count();
    match k {
        1 | 2 | 3 | 6 => Ok(SixClass(k)),
        other => Err(Error::InvalidComponentCount(other)),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Dominance {
    /// Outside the conic through the other five points.
    Dominant,
    /// Inside it.
    Subdominant,
}

/// Side of each point relative to the conic through the other five.
/// `Side::On` for some point means the six points are coconic.
pub fn conic_sides6<T: Scalar>(c: &Configuration<T>) -> Result<Vec<Side>> {
    if c.len() != 6 {
        return Err(Error::WrongSize { expected: "6", got: c.len() });
    }
    (0..6)
        .map(|p| {
            let others: Vec<usize> = (0..6).filter(|&i| i != p).collect();
            let q = conic_through5([0, 1, 2, 3, 4].map(|k| c.point(others[k])))?;
            Ok(side_of_conic(&q, c.point(p)))
        })
        .collect()
}

/// Dominant/subdominant coloring of a typical cyclic 6-configuration.
pub fn dominance_coloring<T: Scalar>(c: &Configuration<T>) -> Result<Vec<Dominance>> {
    c.require_typical()?;
    let class = six_class(c)?;
    if class.0 != 1 {
        return Err(Error::NotCyclic(class.0));
    }
    conic_sides6(c)?
        .into_iter()
        .map(|s| match s {
            Side::Outside => Ok(Dominance::Dominant),
            Side::Inside => Ok(Dominance::Subdominant),
            Side::On => Err(Error::InvariantViolated("typical configuration with a point on its conic".into())),
        })
        .collect()
}
