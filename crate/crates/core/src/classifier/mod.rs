//! Combinatorial invariants of simple and typical configurations and the
//! Q-deformation classifier built from them.

pub mod code;
pub mod dominance;
pub mod fingerprint;
pub mod six;
pub mod spectrum;

pub use code::{derivative_code, deltas, DerivativeCode, TableRow, CODE_TABLE};
pub use dominance::{
    canonical_cyclic_numeration, dominance_indices, dominance_matrix, edge_decorations, heptagonal_region,
    decoration_of, marked_heptagon_numeration, marked_point, pair_conics, DominanceIndices, DominanceMatrix, EdgeDecoration,
    CANONICAL_SEQUENCE, REGION_TABLE,
};
pub use fingerprint::{calibration_table, CalibrationTable, ClassFingerprint, QClass};
pub use six::{conic_sides6, dominance_coloring, six_class, Dominance, SixClass};
pub use spectrum::{convexity_type, polygonal_spectrum, Arrangement, ConvexityType, PolygonalSpectrum};

use crate::configuration::{AdjacencyGraph, Chirotope, Configuration};
use crate::error::{Error, Result};
use crate::geometry::Side;
use crate::scalar::Scalar;
use fingerprint::Features;

/// Every invariant of a typical 7-configuration, computed once.
#[derive(Clone, Debug)]
pub struct SevenAnalysis {
    pub delta: Vec<usize>,
    pub code: DerivativeCode,
    pub graph: AdjacencyGraph,
    pub spectrum: PolygonalSpectrum,
    pub convexity: ConvexityType,
    pub marked: Option<usize>,
    pub dominance: DominanceMatrix,
    pub indices: DominanceIndices,
    pub decorations: Vec<((usize, usize), EdgeDecoration)>,
}

impl SevenAnalysis {
    pub fn new<T: Scalar>(c: &Configuration<T>) -> Result<Self> {
        if c.len() != 7 {
            return Err(Error::WrongSize { expected: "7", got: c.len() });
        }
        c.require_typical()?;
        let delta = deltas(c)?;
        let code = DerivativeCode::from_deltas(&delta);
        let Some(row) = code.table_row() else {
            return Err(Error::UnknownCode(code.0));
        };
        let arr = Arrangement::new(c)?;
        let spectrum = arr.spectrum();
        if spectrum.0[..] != row.spectrum[..] {
            return Err(Error::InvariantViolated(format!(
                "spectrum {:?} does not match code {code}",
                spectrum.0
            )));
        }
        let convexity = convexity_type(&spectrum);
        let marked = match convexity {
            ConvexityType::Heptagonal => None,
            _ => dominance::marked_point_from(&arr, &delta)?,
        };
        let graph = Chirotope::new(c).adjacency_graph(&[0, 1, 2, 3, 4, 5, 6]);
        let dominance = dominance_matrix(c)?;
        let indices = dominance_indices(&dominance);
        let decorations = dominance::decorations_from(&graph, &delta, &dominance);
        Ok(SevenAnalysis { delta, code, graph, spectrum, convexity, marked, dominance, indices, decorations })
    }

    pub fn features(&self) -> Features<'_> {
        Features {
            code: self.code,
            delta: &self.delta,
            graph: &self.graph,
            marked: self.marked,
            dominance: &self.dominance,
        }
    }

    pub fn fingerprint(&self) -> ClassFingerprint {
        fingerprint::fingerprint(&self.features())
    }

    pub fn class_in(&self, table: &CalibrationTable) -> Result<QClass> {
        let fp = self.fingerprint();
        table.lookup(&fp).ok_or(Error::UnknownFingerprint(fp.0))
    }
}

pub fn class_fingerprint<T: Scalar>(c: &Configuration<T>) -> Result<ClassFingerprint> {
    Ok(SevenAnalysis::new(c)?.fingerprint())
}

/// Q-deformation class of a typical 7-configuration.
pub fn q_class<T: Scalar>(c: &Configuration<T>) -> Result<QClass> {
    SevenAnalysis::new(c)?.class_in(calibration_table())
}

/// Canonical fingerprint of a typical 6-configuration: component count,
/// dominance colors and adjacency edges up to relabeling.
pub fn six_class_fingerprint<T: Scalar>(c: &Configuration<T>) -> Result<ClassFingerprint> {
    if c.len() != 6 {
        return Err(Error::WrongSize { expected: "6", got: c.len() });
    }
    c.require_typical()?;
    let graph = Chirotope::new(c).adjacency_graph(&[0, 1, 2, 3, 4, 5]);
    let colors: Vec<u8> = conic_sides6(c)?.into_iter().map(|s| u8::from(s == Side::Outside)).collect();
    Ok(fingerprint::six_fingerprint(&graph, &colors))
}
