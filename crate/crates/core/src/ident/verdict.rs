use std::fmt;

use serde::{Deserialize, Serialize};

use super::bmatrix::{b_rank, BRank};
use super::coeff::jacobian_rank;
use super::support::condition_support;
use crate::algebra::{PrimeField, DEFAULT_PRIME};
use crate::ears::find_nontrivial_ear_decomposition;
use crate::error::{Error, Result};
use crate::graph::DirectedGraph;
use crate::structure::{inductive_ordering, is_minimally_strongly_connected, require_strongly_connected};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Edge bound, support condition, then the rank test.
    #[default]
    Fast,
    /// Like `Fast` but tries the structural YES certificates before ranking.
    Structural,
    /// Like `Fast`, then cross-checks against both rank criteria.
    Audit,
    /// Rank test only.
    RankOnly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Shortcut {
    EarDecomposition,
    MinimallyStronglyConnected,
    InductivelyStronglyConnected,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Config {
    pub prime: u64,
    pub trials: usize,
    pub seed: u64,
    pub mode: Mode,
    /// Order in which structural mode tries its certificates.
    pub shortcuts: Vec<Shortcut>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            prime: DEFAULT_PRIME,
            trials: 3,
            seed: 0,
            mode: Mode::Fast,
            shortcuts: vec![
                Shortcut::EarDecomposition,
                Shortcut::MinimallyStronglyConnected,
                Shortcut::InductivelyStronglyConnected,
            ],
        }
    }
}

impl Config {
    pub fn with_seed(seed: u64) -> Self {
        Config {
            seed,
            ..Config::default()
        }
    }

    /// The configured field, checked against a graph on `n` vertices.
    pub fn field(&self, n: usize) -> Result<PrimeField> {
        let field = PrimeField::new(self.prime)?;
        if self.prime <= n as u64 {
            return Err(Error::InvalidConfig(format!(
                "prime {} must exceed the vertex count {n}",
                self.prime
            )));
        }
        if self.trials == 0 {
            return Err(Error::InvalidConfig("at least one trial is required".into()));
        }
        Ok(field)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Answer {
    #[serde(rename = "YES")]
    Yes,
    #[serde(rename = "NO")]
    No,
}

impl Answer {
    pub fn from_bool(yes: bool) -> Self {
        if yes {
            Answer::Yes
        } else {
            Answer::No
        }
    }

    pub fn is_yes(self) -> bool {
        self == Answer::Yes
    }
}

impl fmt::Display for Answer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.is_yes() { "YES" } else { "NO" })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Certificate {
    SingleVertex,
    EdgeBound {
        edges: usize,
        bound: usize,
    },
    ConditionSupport {
        i: usize,
        j: usize,
    },
    NontrivialEarDecomposition {
        ears: Vec<Vec<usize>>,
    },
    MinimallyStronglyConnected,
    InductivelyStronglyConnected {
        ordering: Vec<usize>,
    },
    RankTest {
        rank: usize,
        #[serde(rename = "L_size")]
        l_size: usize,
        trials: usize,
        prime: u64,
    },
}

impl Certificate {
    /// The answer this certificate proves.
    pub fn polarity(&self) -> Answer {
        match self {
            Certificate::EdgeBound { .. } | Certificate::ConditionSupport { .. } => Answer::No,
            Certificate::RankTest { rank, l_size, .. } => Answer::from_bool(rank == l_size),
            _ => Answer::Yes,
        }
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::SingleVertex => f.write_str("SingleVertex"),
            Certificate::EdgeBound { edges, bound } => write!(f, "EdgeBound({edges} edges > {bound})"),
            Certificate::ConditionSupport { i, j } => write!(f, "ConditionSupport({i},{j})"),
            Certificate::NontrivialEarDecomposition { ears } => {
                let ears: Vec<String> = ears
                    .iter()
                    .map(|e| e.iter().map(usize::to_string).collect::<Vec<_>>().join("->"))
                    .collect();
                write!(f, "NontrivialEarDecomposition[{}]", ears.join("; "))
            }
            Certificate::MinimallyStronglyConnected => f.write_str("MinimallyStronglyConnected"),
            Certificate::InductivelyStronglyConnected { ordering } => {
                write!(f, "InductivelyStronglyConnected{ordering:?}")
            }
            Certificate::RankTest {
                rank,
                l_size,
                trials,
                prime,
            } => {
                write!(f, "RankTest({rank},{l_size}; {trials} trials mod {prime})")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub answer: Answer,
    pub certificate: Certificate,
    pub prime: u64,
    pub trials: usize,
    pub seed: u64,
    /// Rank of `B(G)`, when it was computed.
    pub rank: Option<usize>,
    #[serde(rename = "L_size")]
    pub l_size: usize,
    #[serde(rename = "R_size")]
    pub r_size: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub jacobian_rank: Option<usize>,
}

impl Verdict {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("verdicts always serialize")
    }
}

/// Seed for an independent re-run.
pub(crate) fn derived_seed(seed: u64) -> u64 {
    // splitmix64 finalizer
    let mut z = seed.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn rank_certificate(rank: &BRank, prime: u64) -> Certificate {
    Certificate::RankTest {
        rank: rank.rank,
        l_size: rank.l_size,
        trials: rank.trials,
        prime,
    }
}

fn structural(g: &DirectedGraph, shortcut: Shortcut) -> Result<Option<Certificate>> {
    Ok(match shortcut {
        Shortcut::EarDecomposition => {
            find_nontrivial_ear_decomposition(g)?.map(|ed| Certificate::NontrivialEarDecomposition {
                ears: ed.ears().iter().map(|e| e.vertices.clone()).collect(),
            })
        }
        Shortcut::MinimallyStronglyConnected => {
            is_minimally_strongly_connected(g)?.then_some(Certificate::MinimallyStronglyConnected)
        }
        Shortcut::InductivelyStronglyConnected => {
            if g.edge_count() > 2 * g.n() - 2 {
                None
            } else {
                inductive_ordering(g)?.map(|ordering| Certificate::InductivelyStronglyConnected { ordering })
            }
        }
    })
}

/// Decides whether `g` admits an identifiable scaling reparametrization.
pub fn decide(g: &DirectedGraph, config: &Config) -> Result<Verdict> {
    require_strongly_connected(g)?;
    let field = config.field(g.n())?;
    let (n, m) = (g.n(), g.edge_count());
    let mut verdict = Verdict {
        answer: Answer::Yes,
        certificate: Certificate::SingleVertex,
        prime: config.prime,
        trials: config.trials,
        seed: config.seed,
        rank: None,
        l_size: (n - 1) * (n.max(2) - 2),
        r_size: n * (n - 1) - m,
        jacobian_rank: None,
    };
    let mut cert = None;
    if n == 1 {
        cert = Some(Certificate::SingleVertex);
    } else if config.mode != Mode::RankOnly {
        if m > 2 * n - 2 {
            cert = Some(Certificate::EdgeBound {
                edges: m,
                bound: 2 * n - 2,
            });
        } else if let Some((i, j)) = condition_support(g) {
            cert = Some(Certificate::ConditionSupport { i, j });
        } else if config.mode == Mode::Structural {
            for &s in &config.shortcuts {
                cert = structural(g, s)?;
                if cert.is_some() {
                    break;
                }
            }
        }
    }
    let cert = match cert {
        Some(c) => c,
        None => {
            let r = b_rank(g, &field, config.trials, config.seed);
            verdict.rank = Some(r.rank);
            rank_certificate(&r, config.prime)
        }
    };
    verdict.answer = cert.polarity();
    verdict.certificate = cert;
    if config.mode == Mode::Audit {
        audit(g, &field, config, &mut verdict)?;
    }
    Ok(verdict)
}

/// Runs both rank criteria and insists they agree with the verdict. A
/// deficient `B(G)` rank is re-tested under a derived seed first.
fn audit(g: &DirectedGraph, field: &PrimeField, config: &Config, verdict: &mut Verdict) -> Result<()> {
    let mut b = b_rank(g, field, config.trials, config.seed);
    if !b.full_rank {
        let again = b_rank(g, field, config.trials, derived_seed(config.seed));
        b = BRank {
            rank: b.rank.max(again.rank),
            trials: b.trials + again.trials,
            ..b
        };
        b.full_rank = b.rank == b.l_size;
        if let Certificate::RankTest { .. } = verdict.certificate {
            verdict.certificate = rank_certificate(&b, config.prime);
            verdict.answer = verdict.certificate.polarity();
        }
    }
    let j = jacobian_rank(g, field, config.trials, config.seed);
    verdict.rank = Some(b.rank);
    verdict.jacobian_rank = Some(j.rank);
    let answer = verdict.answer.is_yes();
    if b.full_rank != answer || j.expected != answer {
        return Err(Error::OracleDisagreement(format!(
            "{g}: verdict {} by {}, B(G) rank {}/{}, jacobian rank {}/{}",
            verdict.answer,
            verdict.certificate,
            b.rank,
            b.l_size,
            j.rank,
            g.edge_count() + 1
        )));
    }
    Ok(())
}
