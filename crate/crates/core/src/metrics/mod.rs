//! Expansion, spectral, girth and diameter measurements.

mod balls;
mod cycles;
mod expansion;
mod spectral;

pub use balls::{ball_expansion_profile, ball_expansion_profile_with, BallProfile, BallRow, BallSummary};
pub(crate) use cycles::{girth_below, CycleScanner};
pub use cycles::{diameter, eccentricity, girth, shortest_cycle, Diameter, Girth};
pub use expansion::{
    cheeger_exact, conductance_exact, conductance_exact_with_witness, edge_boundary_size,
    vertex_boundary, vertex_expansion_exact, ExpansionWitness, Rational, DEFAULT_EXACT_LIMIT,
};
pub use spectral::{spectrum, spectrum_with, walk_eigenvalues, Spectrum, SpectrumOptions};

use serde::Serialize;

use crate::error::Result;
use crate::format::round_sig;
use crate::graph::Graph;

/// Everything measured about one graph.
#[derive(Debug, Clone, PartialEq)]
pub struct MetricsReport {
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    pub h_exact: Option<Rational>,
    pub conductance_exact: Option<Rational>,
    /// Absent when the graph is disconnected or has a single vertex.
    pub spectrum: Option<Spectrum>,
    pub girth: Girth,
    pub diameter: Diameter,
}

#[derive(Debug, Clone, Copy)]
pub struct MeasureOptions {
    pub exact_limit: usize,
    pub spectral: SpectrumOptions,
}

impl Default for MeasureOptions {
    fn default() -> Self {
        MeasureOptions {
            exact_limit: DEFAULT_EXACT_LIMIT,
            spectral: SpectrumOptions::default(),
        }
    }
}

pub fn measure(g: &Graph, opts: &MeasureOptions) -> Result<MetricsReport> {
    let connected = g.is_connected();
    let small_enough = g.n() <= opts.exact_limit;
    let h_exact = if small_enough && g.n() >= 3 {
        Some(cheeger_exact(g, opts.exact_limit)?)
    } else {
        None
    };
    let conductance = if small_enough && connected && g.n() >= 2 {
        Some(conductance_exact(g, opts.exact_limit)?)
    } else {
        None
    };
    let spectrum = if connected && g.n() >= 2 {
        Some(spectrum_with(g, &opts.spectral)?)
    } else {
        None
    };
    Ok(MetricsReport {
        n: g.n(),
        m: g.m(),
        max_degree: g.max_degree(),
        h_exact,
        conductance_exact: conductance,
        spectrum,
        girth: girth(g),
        diameter: diameter(g),
    })
}

/// Flat JSON shape of [`MetricsReport`] with stable key names. Reals are
/// rounded to 9 significant digits.
#[derive(Debug, Serialize)]
pub struct MetricsJson {
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    pub h_exact_num: Option<u64>,
    pub h_exact_den: Option<u64>,
    pub conductance_num: Option<u64>,
    pub conductance_den: Option<u64>,
    pub lambda2: Option<f64>,
    pub rho_star: Option<f64>,
    pub gap: Option<f64>,
    pub girth: Option<usize>,
    pub girth_unbounded: bool,
    pub diameter: Option<usize>,
    pub diameter_disconnected: bool,
}

impl MetricsReport {
    pub fn to_json(&self) -> MetricsJson {
        let sp = |f: fn(&Spectrum) -> f64| self.spectrum.as_ref().map(|s| round_sig(f(s), 9));
        MetricsJson {
            n: self.n,
            m: self.m,
            max_degree: self.max_degree,
            h_exact_num: self.h_exact.map(|r| *r.numer()),
            h_exact_den: self.h_exact.map(|r| *r.denom()),
            conductance_num: self.conductance_exact.map(|r| *r.numer()),
            conductance_den: self.conductance_exact.map(|r| *r.denom()),
            lambda2: sp(|s| s.lambda2),
            rho_star: sp(|s| s.rho_star),
            gap: sp(|s| s.gap),
            girth: self.girth.finite(),
            girth_unbounded: self.girth == Girth::Unbounded,
            diameter: self.diameter.finite(),
            diameter_disconnected: self.diameter == Diameter::Disconnected,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{named_graph, NamedGraph};

    #[test]
    fn eight_cycle_report() {
        let r = measure(&named_graph(NamedGraph::Cycle, 8).unwrap(), &MeasureOptions::default()).unwrap();
        assert_eq!(r.girth, Girth::Finite(8));
        assert_eq!(r.diameter, Diameter::Finite(4));
        assert_eq!(r.h_exact, Some(Rational::new(2, 3)));
        let json = serde_json::to_value(r.to_json()).unwrap();
        assert_eq!(json["h_exact_num"], 2);
        assert_eq!(json["h_exact_den"], 3);
        assert_eq!(json["girth_unbounded"], false);
    }

    #[test]
    fn large_graph_skips_exact_fields() {
        let r = measure(&named_graph(NamedGraph::Cycle, 30).unwrap(), &MeasureOptions::default()).unwrap();
        assert!(r.h_exact.is_none() && r.conductance_exact.is_none());
        assert!(r.spectrum.is_some());
    }

    #[test]
    fn forest_and_disconnected_encodings() {
        let g = Graph::from_edges(5, [(0, 1), (2, 3)]).unwrap();
        let r = measure(&g, &MeasureOptions::default()).unwrap();
        let json = serde_json::to_value(r.to_json()).unwrap();
        assert!(json["girth"].is_null() && json["girth_unbounded"] == true);
        assert!(json["diameter"].is_null() && json["diameter_disconnected"] == true);
        assert!(json["lambda2"].is_null());
        assert_eq!(json["h_exact_num"], 0);
    }
}
