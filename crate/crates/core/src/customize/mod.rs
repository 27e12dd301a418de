//! Metric customization: turning a metric-independent labeling into
//! distance labels for one concrete metric.

pub mod hierarchical;
pub mod queue;

use std::fmt;
use std::str::FromStr;

pub use hierarchical::{
    compare_customizations, customize_edges, customize_hierarchical, customize_top_down,
    customize_upward_dijkstra, triangle_pass, EdgeDistances, EngineAgreement, HierarchicalEngine,
};
pub use queue::{customize_queue, customize_queue_observed, DequeueEvent, QueueOutcome, QueueStats};

use crate::Error;

/// Engine selector in its textual form: `upward`, `topdown`,
/// `hybrid:<cutoff>` or `queue`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Engine {
    Hierarchical(HierarchicalEngine),
    Queue,
}

impl FromStr for Engine {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "upward" => Ok(Engine::Hierarchical(HierarchicalEngine::UpwardDijkstra)),
            "topdown" => Ok(Engine::Hierarchical(HierarchicalEngine::TopDown)),
            "queue" => Ok(Engine::Queue),
            _ => match s.strip_prefix("hybrid:").map(str::parse::<usize>) {
                Some(Ok(cutoff)) => Ok(Engine::Hierarchical(HierarchicalEngine::Hybrid { cutoff })),
                _ => Err(Error::invalid(format!(
                    "unknown engine '{s}' (expected upward, topdown, hybrid:<cutoff> or queue)"
                ))),
            },
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Engine::Hierarchical(HierarchicalEngine::UpwardDijkstra) => f.write_str("upward"),
            Engine::Hierarchical(HierarchicalEngine::TopDown) => f.write_str("topdown"),
            Engine::Hierarchical(HierarchicalEngine::Hybrid { cutoff }) => write!(f, "hybrid:{cutoff}"),
            Engine::Queue => f.write_str("queue"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn engine_names_round_trip() {
        for name in ["upward", "topdown", "hybrid:17", "queue"] {
            assert_eq!(name.parse::<Engine>().unwrap().to_string(), name);
        }
        assert!("hybrid:x".parse::<Engine>().is_err());
        assert!("dijkstra".parse::<Engine>().is_err());
    }
}
