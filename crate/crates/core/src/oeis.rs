//! Integer-sequence cross-check client: fetch catalogued terms over HTTP
//! with a local write-through cache, fall back to an embedded fixture
//! offline, and compare the signed inversion–pair coefficient rows against
//! the catalogued sequence.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::time::Duration;

use num_bigint::BigInt;
use thiserror::Error;

use crate::enumerate::{histogram, EnumCaps, EnumError, ExecMode, Group};
use crate::poly::{q_double_factorial_even, q_int, IntPolynomial};
use crate::stats::{stat, StatKind};

const FIXTURE_ID: &str = "A162206";
const FIXTURE_TEXT: &str = include_str!("../fixtures/A162206.txt");
const DEFAULT_TIMEOUT: Duration = Duration::from_secs(10);

#[derive(Debug, Error)]
pub enum OeisError {
    #[error("sequence id {found:?} must be one letter followed by six digits")]
    BadId { found: String },
    #[error(
        "no local copy of {id}: network fetch failed ({detail}); \
         rerun offline to use the embedded fixture, or populate the cache"
    )]
    Unavailable { id: String, detail: String },
    #[error("offline and no cached or embedded copy of {id}")]
    OfflineMiss { id: String },
    #[error("response for {id} contained no terms")]
    Empty { id: String },
    #[error("unparseable term {text:?} in data for {id}")]
    BadTerm { id: String, text: String },
    #[error("cache io failure at {path}: {detail}")]
    Io { path: String, detail: String },
    #[error("halving of the signed inversion–pair distribution failed at n = {n}")]
    HalvingFailed { n: u32 },
    #[error(transparent)]
    Enum(#[from] EnumError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SequenceSource {
    Network,
    Cache,
    Fixture,
}

impl SequenceSource {
    pub fn label(self) -> &'static str {
        match self {
            SequenceSource::Network => "network",
            SequenceSource::Cache => "cache",
            SequenceSource::Fixture => "fixture",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OeisSequence {
    pub id: String,
    pub terms: Vec<BigInt>,
    pub source: SequenceSource,
}

/// Blocking client with a plain-text cache: first line the sequence id,
/// then one integer per line. Cache writes go through a temp file and an
/// atomic rename, so concurrent readers never observe a partial file.
#[derive(Debug, Clone)]
pub struct OeisClient {
    cache_dir: PathBuf,
    base_url: String,
    timeout: Duration,
    offline: bool,
}

fn default_cache_dir() -> PathBuf {
    if let Some(dir) = std::env::var_os("WIDTHK_OEIS_CACHE") {
        return PathBuf::from(dir);
    }
    if let Some(dir) = std::env::var_os("XDG_CACHE_HOME") {
        return PathBuf::from(dir).join("widthk-oeis");
    }
    if let Some(home) = std::env::var_os("HOME") {
        return PathBuf::from(home).join(".cache").join("widthk-oeis");
    }
    std::env::temp_dir().join("widthk-oeis")
}

fn validate_id(id: &str) -> Result<(), OeisError> {
    let bytes = id.as_bytes();
    let ok = bytes.len() == 7
        && bytes[0].is_ascii_alphabetic()
        && bytes[1..].iter().all(u8::is_ascii_digit);
    if ok {
        Ok(())
    } else {
        Err(OeisError::BadId {
            found: id.to_string(),
        })
    }
}

fn parse_terms(id: &str, lines: impl Iterator<Item = String>) -> Result<Vec<BigInt>, OeisError> {
    let mut terms = Vec::new();
    for line in lines {
        let text = line.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        terms.push(text.parse::<BigInt>().map_err(|_| OeisError::BadTerm {
            id: id.to_string(),
            text: text.to_string(),
        })?);
    }
    if terms.is_empty() {
        return Err(OeisError::Empty { id: id.to_string() });
    }
    Ok(terms)
}

impl OeisClient {
    pub fn new(offline: bool) -> Self {
        OeisClient {
            cache_dir: default_cache_dir(),
            base_url: "https://oeis.org".to_string(),
            timeout: DEFAULT_TIMEOUT,
            offline,
        }
    }

    pub fn with_cache_dir(mut self, dir: PathBuf) -> Self {
        self.cache_dir = dir;
        self
    }

    /// Point at a different host (tests serve canned responses locally).
    pub fn with_base_url(mut self, base_url: String) -> Self {
        self.base_url = base_url;
        self
    }

    pub fn with_timeout(mut self, timeout: Duration) -> Self {
        self.timeout = timeout;
        self
    }

    fn cache_path(&self, id: &str) -> PathBuf {
        self.cache_dir.join(format!("{id}.txt"))
    }

    fn read_cache(&self, id: &str) -> Option<Result<Vec<BigInt>, OeisError>> {
        let text = fs::read_to_string(self.cache_path(id)).ok()?;
        let mut lines = text.lines();
        if lines.next() != Some(id) {
            return None;
        }
        Some(parse_terms(id, lines.map(str::to_string)))
    }

    fn write_cache(&self, id: &str, terms: &[BigInt]) -> Result<(), OeisError> {
        let io_err = |path: &PathBuf, e: std::io::Error| OeisError::Io {
            path: path.display().to_string(),
            detail: e.to_string(),
        };
        fs::create_dir_all(&self.cache_dir).map_err(|e| io_err(&self.cache_dir, e))?;
        let tmp = self.cache_dir.join(format!(".{id}.tmp"));
        {
            let mut file = fs::File::create(&tmp).map_err(|e| io_err(&tmp, e))?;
            writeln!(file, "{id}").map_err(|e| io_err(&tmp, e))?;
            for term in terms {
                writeln!(file, "{term}").map_err(|e| io_err(&tmp, e))?;
            }
        }
        let target = self.cache_path(id);
        fs::rename(&tmp, &target).map_err(|e| io_err(&target, e))
    }

    fn fetch_network(&self, id: &str) -> Result<Vec<BigInt>, String> {
        // The b-file lists "index term" pairs, one per line, '#' comments.
        let url = format!("{}/{}/b{}.txt", self.base_url, id, &id[1..]);
        let agent = ureq::Agent::new_with_config(
            ureq::Agent::config_builder()
                .timeout_global(Some(self.timeout))
                .build(),
        );
        let mut response = agent.get(&url).call().map_err(|e| e.to_string())?;
        let text = response
            .body_mut()
            .read_to_string()
            .map_err(|e| e.to_string())?;
        let mut terms = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let term = line.split_whitespace().nth(1).ok_or("missing term column")?;
            terms.push(
                term.parse::<BigInt>()
                    .map_err(|_| format!("unparseable term {term:?}"))?,
            );
        }
        if terms.is_empty() {
            return Err("no terms in response".to_string());
        }
        Ok(terms)
    }

    fn fixture(id: &str) -> Option<Vec<BigInt>> {
        if id != FIXTURE_ID {
            return None;
        }
        let mut lines = FIXTURE_TEXT.lines();
        let header = lines.next();
        debug_assert_eq!(header, Some(FIXTURE_ID));
        parse_terms(id, lines.map(str::to_string)).ok()
    }

    pub fn fetch(&self, id: &str) -> Result<OeisSequence, OeisError> {
        validate_id(id)?;
        if let Some(cached) = self.read_cache(id) {
            return Ok(OeisSequence {
                id: id.to_string(),
                terms: cached?,
                source: SequenceSource::Cache,
            });
        }
        if self.offline {
            if let Some(terms) = Self::fixture(id) {
                return Ok(OeisSequence {
                    id: id.to_string(),
                    terms,
                    source: SequenceSource::Fixture,
                });
            }
            return Err(OeisError::OfflineMiss { id: id.to_string() });
        }
        match self.fetch_network(id) {
            Ok(terms) => {
                self.write_cache(id, &terms)?;
                Ok(OeisSequence {
                    id: id.to_string(),
                    terms,
                    source: SequenceSource::Network,
                })
            }
            Err(detail) => Err(OeisError::Unavailable {
                id: id.to_string(),
                detail,
            }),
        }
    }
}

/// Closed form of one coefficient row: `[n]_x · [2(n-1)]_x!!`, half the
/// signed inversion–pair distribution over the rank-`n` signed group.
pub fn closed_half_row(n: u32) -> IntPolynomial {
    &q_int(n) * &q_double_factorial_even(n - 1)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConventionReport {
    pub label: String,
    pub matched_prefix: usize,
    pub compared: usize,
    pub full_match: bool,
}

#[derive(Debug, Clone)]
pub struct Eq5Report {
    pub sequence: OeisSequence,
    pub n_max: u32,
    /// Ranks whose enumerated distribution was halved exactly against the
    /// closed row before any external comparison.
    pub verified_ranks: Vec<u32>,
    pub conventions: Vec<ConventionReport>,
}

impl Eq5Report {
    pub fn render_text(&self) -> String {
        let mut out = format!(
            "sequence {} ({} terms, source {})\n",
            self.sequence.id,
            self.sequence.terms.len(),
            self.sequence.source.label()
        );
        out.push_str(&format!(
            "internal halving identity verified by enumeration for n = {:?}\n",
            self.verified_ranks
        ));
        for c in &self.conventions {
            out.push_str(&format!(
                "{}: matched prefix {}/{}{}\n",
                c.label,
                c.matched_prefix,
                c.compared,
                if c.full_match { " (full agreement)" } else { "" }
            ));
        }
        out
    }

    pub fn any_full_match(&self) -> bool {
        self.conventions.iter().any(|c| c.full_match)
    }
}

fn prefix_report(label: &str, ours: &[BigInt], theirs: &[BigInt]) -> ConventionReport {
    let compared = ours.len().min(theirs.len());
    let matched_prefix = (0..compared).take_while(|&i| ours[i] == theirs[i]).count();
    ConventionReport {
        label: label.to_string(),
        matched_prefix,
        compared,
        full_match: compared > 0 && matched_prefix == compared,
    }
}

/// Check the halving identity by enumeration for each `n ≤ n_max`, then
/// report how the concatenated closed rows line up with the catalogued
/// sequence under row-by-row ascending conventions.
pub fn compare_eq5(
    client: &OeisClient,
    n_max: u32,
    caps: &EnumCaps,
    mode: ExecMode,
) -> Result<Eq5Report, OeisError> {
    let mut verified_ranks = Vec::new();
    for n in 1..=n_max {
        let counts = histogram(Group::Hyperoctahedral, n as usize, caps, mode, |w| {
            Some((stat(StatKind::InvA, w, 1).unwrap() + stat(StatKind::Nsp, w, 1).unwrap()) as usize)
        })?;
        let enumerated = IntPolynomial::from_counts(&counts);
        let closed = closed_half_row(n).scalar_mul(&BigInt::from(2));
        if enumerated != closed {
            return Err(OeisError::HalvingFailed { n });
        }
        verified_ranks.push(n);
    }

    let sequence = client.fetch(FIXTURE_ID)?;
    let concat = |from: u32| -> Vec<BigInt> {
        (from..=n_max)
            .flat_map(|n| closed_half_row(n).coeffs().to_vec())
            .collect()
    };
    let conventions = vec![
        prefix_report(
            "rows n = 1.. ascending p",
            &concat(1),
            &sequence.terms,
        ),
        prefix_report(
            "rows n = 2.. ascending p",
            &concat(2),
            &sequence.terms,
        ),
    ];
    Ok(Eq5Report {
        sequence,
        n_max,
        verified_ranks,
        conventions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Read;
    use std::net::TcpListener;

    fn temp_client(offline: bool) -> (OeisClient, tempfile::TempDir) {
        let dir = tempfile::tempdir().unwrap();
        let client = OeisClient::new(offline).with_cache_dir(dir.path().to_path_buf());
        (client, dir)
    }

    #[test]
    fn id_validation() {
        let (client, _dir) = temp_client(true);
        assert!(matches!(client.fetch(""), Err(OeisError::BadId { .. })));
        assert!(matches!(client.fetch("162206"), Err(OeisError::BadId { .. })));
        assert!(matches!(client.fetch("A16220"), Err(OeisError::BadId { .. })));
        assert!(matches!(
            client.fetch("A1622066"),
            Err(OeisError::BadId { .. })
        ));
    }

    #[test]
    fn offline_fixture_and_miss() {
        let (client, _dir) = temp_client(true);
        let seq = client.fetch("A162206").unwrap();
        assert_eq!(seq.source, SequenceSource::Fixture);
        assert_eq!(seq.terms[..4], [1, 1, 2, 1].map(BigInt::from));
        assert!(matches!(
            client.fetch("A000001"),
            Err(OeisError::OfflineMiss { .. })
        ));
    }

    #[test]
    fn cache_round_trip() {
        let (client, _dir) = temp_client(true);
        let terms: Vec<BigInt> = [3, 1, 4, 1, 5].map(BigInt::from).to_vec();
        client.write_cache("A000796", &terms).unwrap();
        let seq = client.fetch("A000796").unwrap();
        assert_eq!(seq.source, SequenceSource::Cache);
        assert_eq!(seq.terms, terms);
    }

    #[test]
    fn online_fetch_parses_and_caches() {
        let listener = TcpListener::bind("127.0.0.1:0").unwrap();
        let addr = listener.local_addr().unwrap();
        let server = std::thread::spawn(move || {
            // Serve the same canned b-file for both expected requests.
            for _ in 0..2 {
                let (mut stream, _) = listener.accept().unwrap();
                let mut buf = [0u8; 1024];
                let _ = stream.read(&mut buf);
                let body = "# comment line\n1 1\n2 1\n3 2\n4 1\n";
                let response = format!(
                    "HTTP/1.1 200 OK\r\nContent-Length: {}\r\nConnection: close\r\n\r\n{}",
                    body.len(),
                    body
                );
                use std::io::Write;
                stream.write_all(response.as_bytes()).unwrap();
            }
        });

        let dir = tempfile::tempdir().unwrap();
        let client = OeisClient::new(false)
            .with_cache_dir(dir.path().to_path_buf())
            .with_base_url(format!("http://{addr}"));
        let first = client.fetch("A000002").unwrap();
        assert_eq!(first.source, SequenceSource::Network);
        assert_eq!(first.terms, [1, 1, 2, 1].map(BigInt::from).to_vec());
        // Second fetch must come from the cache, not the socket.
        let second = client.fetch("A000002").unwrap();
        assert_eq!(second.source, SequenceSource::Cache);
        assert_eq!(second.terms, first.terms);
        drop(client);
        // Unblock the server thread's second accept.
        let spare = OeisClient::new(false)
            .with_cache_dir(tempfile::tempdir().unwrap().path().to_path_buf())
            .with_base_url(format!("http://{addr}"));
        let _ = spare.fetch("A000003");
        let _ = server.join();
    }

    #[test]
    fn network_failure_is_descriptive() {
        let dir = tempfile::tempdir().unwrap();
        let client = OeisClient::new(false)
            .with_cache_dir(dir.path().to_path_buf())
            .with_base_url("http://127.0.0.1:1".to_string())
            .with_timeout(Duration::from_millis(200));
        let err = client.fetch("A162206").unwrap_err();
        let text = err.to_string();
        assert!(text.contains("offline"), "error should point at the fixture path: {text}");
    }

    #[test]
    fn comparison_verifies_then_matches_fixture() {
        let (client, _dir) = temp_client(true);
        let report = compare_eq5(&client, 4, &EnumCaps::default(), ExecMode::Parallel).unwrap();
        assert_eq!(report.verified_ranks, vec![1, 2, 3, 4]);
        assert!(report.conventions[0].full_match);
        assert_eq!(report.conventions[0].matched_prefix, 1 + 3 + 7 + 13);
        assert!(!report.conventions[1].full_match);
        assert!(report.any_full_match());
        let text = report.render_text();
        assert!(text.contains("source fixture"));
        assert!(text.contains("full agreement"));
    }

    #[test]
    fn closed_rows_pin_small_values() {
        assert_eq!(closed_half_row(1), IntPolynomial::from_i64(&[1]));
        assert_eq!(closed_half_row(2), IntPolynomial::from_i64(&[1, 2, 1]));
        assert_eq!(
            closed_half_row(3),
            IntPolynomial::from_i64(&[1, 3, 5, 6, 5, 3, 1])
        );
    }
}
