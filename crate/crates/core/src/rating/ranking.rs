use crate::linalg::Vector;
use crate::semifield::Semifield;

/// Alternatives ordered by decreasing score; equal scores share a tier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ranking {
    pub tiers: Vec<Vec<usize>>,
}

impl Ranking {
    pub fn of<S: Semifield>(scores: &Vector<S>) -> Self {
        let mut order: Vec<usize> = (0..scores.dim()).collect();
        order.sort_by(|&i, &j| scores.get(j).compare(scores.get(i)).then(i.cmp(&j)));
        let mut tiers: Vec<Vec<usize>> = Vec::new();
        for i in order {
            match tiers.last_mut() {
                Some(tier) if scores.get(tier[0]).tol_eq(scores.get(i)) => tier.push(i),
                _ => tiers.push(vec![i]),
            }
        }
        Self { tiers }
    }

    /// `a > b = c` with the given labels.
    pub fn display(&self, labels: &[String]) -> String {
        self.tiers
            .iter()
            .map(|tier| {
                tier.iter()
                    .map(|&i| labels.get(i).cloned().unwrap_or_else(|| format!("alt{}", i + 1)))
                    .collect::<Vec<_>>()
                    .join(" = ")
            })
            .collect::<Vec<_>>()
            .join(" > ")
    }
}
