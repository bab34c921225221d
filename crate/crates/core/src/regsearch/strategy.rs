use num_traits::ToPrimitive;

use super::{SearchParams, Strategy};
use crate::hypercore::ColouredGraph;
use crate::oracles::hom_cycle_count;

/// Knobs of the dispatcher. `threshold_base` is the 128 in
/// `(base h^{3/2} mu^{1/2})^{2h} n d^h`; lowering it lets small instances
/// qualify for the cycle strategy.
#[derive(Debug, Clone, PartialEq)]
pub struct StrategyConstants {
    pub threshold_base: f64,
    pub alpha: f64,
    /// Largest h tried before giving up on the `s >= n d^{1/2 - h}` test.
    pub max_h: usize,
}

impl Default for StrategyConstants {
    fn default() -> Self {
        StrategyConstants {
            threshold_base: 128.0,
            alpha: 2.0,
            max_h: 16,
        }
    }
}

/// Graph statistics the choice was based on. `log_hom` and
/// `log_threshold` are natural logs and only set when the hom count was
/// consulted.
#[derive(Debug, Clone, PartialEq)]
pub struct StrategyStats {
    pub n: usize,
    pub s: usize,
    pub d: f64,
    pub mu: f64,
    pub h: usize,
    pub log_hom: Option<f64>,
    pub log_threshold: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum StrategyChoice {
    Chosen {
        strategy: Strategy,
        params: SearchParams,
        stats: StrategyStats,
    },
    /// No edges, nothing to search.
    NotApplicable,
}

/// Balance of `g`: how far the max degree and the busiest colour exceed
/// their averages, at least 1.
pub fn balance(g: &ColouredGraph) -> f64 {
    let n = g.active_vertices() as f64;
    let e = g.m() as f64;
    let s = g.colours_in_use() as f64;
    if e == 0.0 {
        return 1.0;
    }
    let d = 2.0 * e / n;
    let by_degree = g.max_degree() as f64 / d;
    let by_colour = g.max_colour_use() as f64 * s / e;
    by_degree.max(by_colour).max(1.0)
}

fn big_ln(x: &num_bigint::BigUint) -> f64 {
    if let Some(f) = x.to_f64().filter(|f| f.is_finite()) {
        return f.ln();
    }
    let bits = x.bits();
    let shift = bits.saturating_sub(60);
    let top = (x >> shift).to_f64().unwrap();
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// Picks a strategy and default parameters for `g`, counting only vertices
/// of positive degree and colours in use.
///
/// h is the smallest positive integer with `s >= n d^{1/2 - h}`; h = 1
/// means matchings. Otherwise the cycle strategy is used when
/// `hom(C_2h, g)` beats the threshold, else paths. If no h up to `max_h`
/// qualifies (sparse graphs with d <= 1) h falls back to 2.
pub fn choose_strategy(g: &ColouredGraph, consts: &StrategyConstants) -> StrategyChoice {
    if g.m() == 0 {
        return StrategyChoice::NotApplicable;
    }
    let n = g.active_vertices();
    let s = g.colours_in_use();
    let d = 2.0 * g.m() as f64 / n as f64;
    let mu = balance(g);
    let (nf, sf) = (n as f64, s as f64);
    let h = (1..=consts.max_h.max(2))
        .find(|&h| sf.ln() >= nf.ln() + (0.5 - h as f64) * d.ln())
        .unwrap_or(2);
    let mut stats = StrategyStats {
        n,
        s,
        d,
        mu,
        h,
        log_hom: None,
        log_threshold: None,
    };
    let base = SearchParams {
        alpha: consts.alpha,
        ..SearchParams::default()
    };
    if h == 1 {
        let t = ((sf / (16.0 * mu)).ceil() as usize).max(2);
        return StrategyChoice::Chosen {
            strategy: Strategy::Matchings,
            params: SearchParams { t, ..base },
            stats,
        };
    }
    let hf = h as f64;
    let log_hom = big_ln(&hom_cycle_count(&g.to_graph(), h));
    let log_threshold = 2.0 * hf * (consts.threshold_base * hf.powf(1.5) * mu.sqrt()).ln() + nf.ln() + hf * d.ln();
    stats.log_hom = Some(log_hom);
    stats.log_threshold = Some(log_threshold);
    if log_hom > log_threshold {
        let t = ((sf / (32.0 * d * mu * mu * hf)).ceil() as usize).max(1);
        StrategyChoice::Chosen {
            strategy: Strategy::Cycles,
            params: SearchParams { h, t, ..base },
            stats,
        }
    } else {
        let t = ((sf / (8.0 * hf * mu)).ceil() as usize).max(1);
        let mut params = SearchParams { h, t, ..base };
        params.q = Some(params.default_q());
        StrategyChoice::Chosen {
            strategy: Strategy::Paths,
            params,
            stats,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn planted() -> ColouredGraph {
        ColouredGraph::new(
            8,
            4,
            [
                (0, 1, 0),
                (1, 2, 1),
                (2, 3, 2),
                (3, 0, 3),
                (4, 5, 0),
                (5, 6, 1),
                (6, 7, 2),
                (7, 4, 3),
            ],
        )
        .unwrap()
    }

    #[test]
    fn empty_is_not_applicable() {
        let g = ColouredGraph::new(3, 0, []).unwrap();
        assert_eq!(
            choose_strategy(&g, &StrategyConstants::default()),
            StrategyChoice::NotApplicable
        );
    }

    #[test]
    fn many_colours_gives_matchings() {
        // K4 with its proper 3-colouring: s = 3 >= 4 / sqrt(3)
        let g = ColouredGraph::new(4, 3, [(0, 1, 0), (2, 3, 0), (0, 2, 1), (1, 3, 1), (0, 3, 2), (1, 2, 2)]).unwrap();
        let StrategyChoice::Chosen {
            strategy,
            params,
            stats,
        } = choose_strategy(&g, &StrategyConstants::default())
        else {
            panic!()
        };
        assert_eq!(stats.h, 1);
        assert_eq!(strategy, Strategy::Matchings);
        assert!(params.t >= 2);
    }

    #[test]
    fn planted_cycles_both_sides_of_threshold() {
        let g = planted();
        // hom(C4) on two disjoint 4-cycles is 2 * 32
        let StrategyChoice::Chosen { strategy, stats, .. } = choose_strategy(&g, &StrategyConstants::default()) else {
            panic!()
        };
        assert_eq!(stats.h, 2);
        assert!((stats.log_hom.unwrap() - 64f64.ln()).abs() < 1e-9);
        assert!(stats.log_threshold.unwrap() > stats.log_hom.unwrap());
        assert_eq!(strategy, Strategy::Paths);

        let loose = StrategyConstants {
            threshold_base: 0.1,
            ..StrategyConstants::default()
        };
        let StrategyChoice::Chosen {
            strategy,
            params,
            stats,
        } = choose_strategy(&g, &loose)
        else {
            panic!()
        };
        assert!(stats.log_threshold.unwrap() < stats.log_hom.unwrap());
        assert_eq!(strategy, Strategy::Cycles);
        assert_eq!((params.h, params.t), (2, 1));
    }
}
