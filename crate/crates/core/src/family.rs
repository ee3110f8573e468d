//! Named graph families with fixed vertex labelings.

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, GraphError, MAX_ORDER};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FamilyKind {
    /// `P_n`, vertices in traversal order.
    Path { n: usize },
    /// `C_n`, vertices in traversal order; needs `n >= 3`.
    Cycle { n: usize },
    Complete { n: usize },
    /// `K_{1,n-1}` with centre 0; needs `n >= 2`.
    Star { n: usize },
    /// Path on `n - 2s` vertices with `s` pendant leaves on each end.
    /// Needs `s >= 1` and `n - 2s >= 2`.
    DoubleComet { n: usize, s: usize },
}

impl FamilyKind {
    pub fn name(&self) -> &'static str {
        match self {
            FamilyKind::Path { .. } => "path",
            FamilyKind::Cycle { .. } => "cycle",
            FamilyKind::Complete { .. } => "complete",
            FamilyKind::Star { .. } => "star",
            FamilyKind::DoubleComet { .. } => "double_comet",
        }
    }

    pub fn order(&self) -> usize {
        match *self {
            FamilyKind::Path { n }
            | FamilyKind::Cycle { n }
            | FamilyKind::Complete { n }
            | FamilyKind::Star { n }
            | FamilyKind::DoubleComet { n, .. } => n,
        }
    }

    fn validate(&self) -> Result<(), GraphError> {
        let n = self.order();
        let invalid = |reason: String| GraphError::InvalidFamily { kind: self.name(), reason };
        if !(1..=MAX_ORDER).contains(&n) {
            return Err(invalid(format!("n = {n} outside [1, {MAX_ORDER}]")));
        }
        match *self {
            FamilyKind::Cycle { n } if n < 3 => Err(invalid(format!("cycle needs n >= 3, got {n}"))),
            FamilyKind::Star { n } if n < 2 => Err(invalid(format!("star needs n >= 2, got {n}"))),
            FamilyKind::DoubleComet { n, s } if s == 0 || n < 2 * s + 2 => Err(invalid(format!(
                "double comet needs s >= 1 and n >= 2s + 2, got n = {n}, s = {s}"
            ))),
            _ => Ok(()),
        }
    }
}

pub fn family(kind: FamilyKind) -> Result<Graph, GraphError> {
    kind.validate()?;
    let n = kind.order();
    let edges: Vec<(usize, usize)> = match kind {
        FamilyKind::Path { n } => (1..n).map(|v| (v - 1, v)).collect(),
        FamilyKind::Cycle { n } => (1..n).map(|v| (v - 1, v)).chain([(n - 1, 0)]).collect(),
        FamilyKind::Complete { n } => return Graph::complete(n),
        FamilyKind::Star { n } => (1..n).map(|v| (0, v)).collect(),
        FamilyKind::DoubleComet { n, s } => {
            let p = n - 2 * s;
            (1..p)
                .map(|v| (v - 1, v))
                .chain((p..p + s).map(|leaf| (0, leaf)))
                .chain((p + s..n).map(|leaf| (p - 1, leaf)))
                .collect()
        }
    };
    Graph::from_edges(n, &edges)
}

/// Leaves-per-side values `s` for which `double_comet(n, s)` exists.
pub fn double_comet_range(n: usize) -> std::ops::RangeInclusive<usize> {
    1..=n.saturating_sub(2) / 2
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star4() {
        let g = family(FamilyKind::Star { n: 4 }).unwrap();
        assert_eq!(g.degrees(), vec![3, 1, 1, 1]);
    }

    #[test]
    fn double_comet_10_3() {
        let g = family(FamilyKind::DoubleComet { n: 10, s: 3 }).unwrap();
        // path 0-1-2-3, leaves 4,5,6 on 0 and 7,8,9 on 3
        assert_eq!(g.degrees(), vec![4, 2, 2, 4, 1, 1, 1, 1, 1, 1]);
        assert!(g.is_tree());
        assert_eq!(g.degrees().iter().filter(|&&d| d == 4).count(), 2);
    }

    #[test]
    fn cycle3_is_triangle() {
        assert_eq!(family(FamilyKind::Cycle { n: 3 }).unwrap(), Graph::complete(3).unwrap());
    }

    #[test]
    fn path_shape() {
        for n in 2..=20 {
            let g = family(FamilyKind::Path { n }).unwrap();
            assert_eq!(g.edge_count(), n - 1);
            let mut d = g.degrees();
            d.sort();
            assert_eq!(d[..2], [1, 1]);
            assert!(d[2..].iter().all(|&x| x == 2));
        }
    }

    #[test]
    fn double_comets_are_trees() {
        for n in 4..=30 {
            for s in double_comet_range(n) {
                let g = family(FamilyKind::DoubleComet { n, s }).unwrap();
                assert!(g.is_tree(), "n={n} s={s}");
            }
        }
        assert!(double_comet_range(3).is_empty());
        assert_eq!(double_comet_range(10), 1..=4);
    }

    #[test]
    fn invalid_parameters() {
        assert!(family(FamilyKind::Cycle { n: 2 }).is_err());
        assert!(family(FamilyKind::Star { n: 1 }).is_err());
        assert!(family(FamilyKind::DoubleComet { n: 5, s: 2 }).is_err());
        assert!(family(FamilyKind::DoubleComet { n: 6, s: 0 }).is_err());
        assert!(family(FamilyKind::Path { n: 63 }).is_err());
        assert!(family(FamilyKind::DoubleComet { n: 6, s: 2 }).is_ok());
    }
}
