pub mod campaigns;
pub mod lists;
pub mod parallel;
pub mod prng;
pub mod smallring;

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::Serialize;

use crate::cubic_ring::CubicRing;
use crate::counters::OpCounters;

/// One parameter set under which a composite slipped through: the candidate
/// `n`, the parameter index `k` (or power `r` for the 2^r sweep), the
/// resulting `a`, and a short human note. All numbers are decimal strings so
/// reports round-trip through JSON without precision loss.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Counterexample {
    pub n: String,
    pub k: String,
    pub a: String,
    pub detail: String,
}

impl Counterexample {
    pub fn new(n: &BigUint, k: &BigUint, a: &BigUint, detail: &str) -> Self {
        Self {
            n: n.to_string(),
            k: k.to_string(),
            a: a.to_string(),
            detail: detail.to_string(),
        }
    }

    /// Re-runs the core congruence for this record in isolation: with
    /// B = x^(n−1) in Z_n[x]/(x³−ax−a), requires B ≢ 1 and
    /// B² + B + 1 ≡ −x² + x + a. Campaign records must survive this replay.
    pub fn reverifies(&self) -> bool {
        let (Ok(n), Ok(a)) = (BigUint::from_str(&self.n), BigUint::from_str(&self.a)) else {
            return false;
        };
        if n < BigUint::from(3u32) {
            return false;
        }
        let ring = CubicRing::new(&n, &a);
        let mut c = OpCounters::new();
        let b = ring.pow_x(&(&n - 1u32), &mut c);
        !ring.is_one(&b) && crate::cubic::strengthened_check(&ring, &b, &mut c)
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct CampaignStats {
    pub tested: u64,
    pub skipped: u64,
    #[serde(skip)]
    pub elapsed_ms: u64,
}

/// A finished sweep: which campaign ran, with which parameters, and every
/// counterexample it found. Serializes to a stable JSON document — map keys
/// are sorted and timing is excluded, so reruns are byte-identical.
#[derive(Debug, Clone, Serialize)]
pub struct Campaign {
    pub campaign_id: String,
    pub test_id: String,
    pub params: BTreeMap<String, String>,
    pub counterexamples: Vec<Counterexample>,
    pub stats: CampaignStats,
}

impl Campaign {
    pub fn new(campaign_id: &str, test_id: &str) -> Self {
        Self {
            campaign_id: campaign_id.to_string(),
            test_id: test_id.to_string(),
            params: BTreeMap::new(),
            counterexamples: Vec::new(),
            stats: CampaignStats::default(),
        }
    }

    pub fn set_param(&mut self, key: &str, value: impl ToString) {
        self.params.insert(key.to_string(), value.to_string());
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialization");
        s.push('\n');
        s
    }

    /// One-line human summary; this is where timing is reported.
    pub fn summary_line(&self) -> String {
        format!(
            "campaign={} test={} tested={} skipped={} counterexamples={} elapsed_ms={}",
            self.campaign_id,
            self.test_id,
            self.stats.tested,
            self.stats.skipped,
            self.counterexamples.len(),
            self.stats.elapsed_ms
        )
    }

    pub fn is_clean(&self) -> bool {
        self.counterexamples.is_empty()
    }
}
