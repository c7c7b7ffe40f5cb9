use std::fmt;

use serde::{Deserialize, Serialize};

use super::family::{Count, Family};
use crate::quiver::QuiverDatum;

/// The multiloop and multi-edge families that simple-quiver results leave
/// open. Toric non-simple cases are excluded; they are decided by total
/// unimodularity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ObstructionCase {
    LoopedTwoFramed,
    LoopedThreeFramed,
    LoopedFour,
    LoopedTwoMultiOne,
    LoopedTwoMultiLoopedTwo,
}

impl ObstructionCase {
    pub const ALL: [ObstructionCase; 5] = [
        ObstructionCase::LoopedTwoFramed,
        ObstructionCase::LoopedThreeFramed,
        ObstructionCase::LoopedFour,
        ObstructionCase::LoopedTwoMultiOne,
        ObstructionCase::LoopedTwoMultiLoopedTwo,
    ];

    pub fn id(self) -> &'static str {
        match self {
            ObstructionCase::LoopedTwoFramed => "looped-2-framed",
            ObstructionCase::LoopedThreeFramed => "looped-3-framed",
            ObstructionCase::LoopedFour => "looped-4",
            ObstructionCase::LoopedTwoMultiOne => "looped-2-multi-1",
            ObstructionCase::LoopedTwoMultiLoopedTwo => "looped-2-multi-looped-2",
        }
    }

    pub fn family(self) -> Family {
        let looped = |dim, framed| Family {
            dims: vec![dim],
            framed: vec![framed],
            loops: vec![Count::AtLeast(0)],
            edges: vec![],
        };
        match self {
            ObstructionCase::LoopedTwoFramed => looped(2, true),
            ObstructionCase::LoopedThreeFramed => looped(3, true),
            ObstructionCase::LoopedFour => looped(4, false),
            ObstructionCase::LoopedTwoMultiOne => Family {
                dims: vec![1, 2],
                framed: vec![true, true],
                loops: vec![Count::Exactly(0), Count::AtLeast(0)],
                edges: vec![(0, 1, Count::AtLeast(1))],
            },
            ObstructionCase::LoopedTwoMultiLoopedTwo => Family {
                dims: vec![2, 2],
                framed: vec![false, false],
                loops: vec![Count::AtLeast(0), Count::AtLeast(0)],
                edges: vec![(0, 1, Count::AtLeast(1))],
            },
        }
    }

    /// First case whose family contains the datum.
    pub fn matching(datum: &QuiverDatum) -> Option<Self> {
        Self::ALL
            .into_iter()
            .find(|case| case.family().matches(datum))
    }
}

impl fmt::Display for ObstructionCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

pub fn extending_cases() -> Vec<Family> {
    ObstructionCase::ALL.iter().map(|c| c.family()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn listed_cases() {
        let cases = extending_cases();
        assert_eq!(cases.len(), 5);
        let jordan = QuiverDatum::from_edges(1, &[(0, 0)], vec![2], vec![1]).unwrap();
        assert_eq!(
            ObstructionCase::matching(&jordan),
            Some(ObstructionCase::LoopedTwoFramed)
        );
        let four = QuiverDatum::from_edges(1, &[(0, 0)], vec![4], vec![0]).unwrap();
        assert_eq!(
            ObstructionCase::matching(&four),
            Some(ObstructionCase::LoopedFour)
        );
        let path = QuiverDatum::from_edges(2, &[(0, 1)], vec![1, 1], vec![0, 0]).unwrap();
        assert_eq!(ObstructionCase::matching(&path), None);
    }

    #[test]
    fn multi_edge_cases() {
        let d =
            QuiverDatum::from_edges(2, &[(1, 0), (0, 1), (1, 1)], vec![1, 2], vec![2, 0]).unwrap();
        assert_eq!(
            ObstructionCase::matching(&d),
            Some(ObstructionCase::LoopedTwoMultiOne)
        );
        let d = QuiverDatum::from_edges(2, &[(0, 1), (0, 1)], vec![2, 2], vec![0, 0]).unwrap();
        assert_eq!(
            ObstructionCase::matching(&d),
            Some(ObstructionCase::LoopedTwoMultiLoopedTwo)
        );
        let framed = QuiverDatum::from_edges(2, &[(0, 1), (0, 1)], vec![2, 2], vec![1, 0]).unwrap();
        assert_eq!(ObstructionCase::matching(&framed), None);
    }
}
