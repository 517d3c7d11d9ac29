//! Job documents and their schema.
//!
//! A job is a JSON object. Validation walks the raw value so that every
//! problem is reported with the path of the offending field.

use std::collections::BTreeMap;
use std::fmt;

use frobsoc_core::fuzz::Profile;
use frobsoc_core::ring::is_prime;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

pub const DEFAULT_Q_CAP: u64 = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Check,
    Socle,
    Betti,
    Gb,
    Tor1,
    Fuzz,
    Explore,
}

impl Mode {
    pub const ALL: [Mode; 7] = [
        Mode::Check,
        Mode::Socle,
        Mode::Betti,
        Mode::Gb,
        Mode::Tor1,
        Mode::Fuzz,
        Mode::Explore,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Mode::Check => "check",
            Mode::Socle => "socle",
            Mode::Betti => "betti",
            Mode::Gb => "gb",
            Mode::Tor1 => "tor1",
            Mode::Fuzz => "fuzz",
            Mode::Explore => "explore",
        }
    }

    pub fn from_name(s: &str) -> Option<Mode> {
        Mode::ALL.into_iter().find(|m| m.name() == s)
    }

    fn needs_ring(self) -> bool {
        self != Mode::Fuzz
    }

    /// Modes that evaluate the Frobenius conditions need `C` and `e`.
    fn needs_setup(self) -> bool {
        matches!(self, Mode::Check | Mode::Tor1 | Mode::Explore)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub struct Options {
    pub seed: u64,
    pub count: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub all_e_up_to: Option<u32>,
    pub q_cap: u64,
    pub assume_gorenstein: bool,
    pub profile: Profile,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            seed: 0,
            count: 1,
            all_e_up_to: None,
            q_cap: DEFAULT_Q_CAP,
            assume_gorenstein: false,
            profile: Profile::Ci,
        }
    }
}

/// A validated job. Fields a mode does not use may be absent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JobSpec {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    pub vars: Vec<(String, u64)>,
    #[serde(rename = "C")]
    pub c: Vec<String>,
    #[serde(rename = "I")]
    pub i: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub e: Option<u32>,
    pub mode: Mode,
    pub options: Options,
}

/// One schema violation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldError {
    pub path: String,
    pub message: String,
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.path, self.message)
    }
}

#[derive(Debug, PartialEq, Eq)]
pub struct SchemaError(pub Vec<FieldError>);

impl fmt::Display for SchemaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lines: Vec<String> = self.0.iter().map(|e| e.to_string()).collect();
        write!(f, "{}", lines.join("; "))
    }
}

impl std::error::Error for SchemaError {}

const TOP_FIELDS: [&str; 7] = ["p", "vars", "C", "I", "e", "mode", "options"];
const OPTION_FIELDS: [&str; 6] = ["seed", "count", "all-e-up-to", "q-cap", "assume-gorenstein", "profile"];

struct Checker {
    errors: Vec<FieldError>,
}

impl Checker {
    fn fail(&mut self, path: impl Into<String>, message: impl Into<String>) {
        self.errors.push(FieldError {
            path: path.into(),
            message: message.into(),
        });
    }

    fn uint(&mut self, v: &Value, path: &str, min: u64) -> Option<u64> {
        match v.as_u64() {
            Some(n) if n >= min => Some(n),
            Some(n) => {
                self.fail(path, format!("{n} is below the minimum {min}"));
                None
            }
            None => {
                self.fail(path, format!("expected a non-negative integer, found {v}"));
                None
            }
        }
    }

    fn strings(&mut self, v: &Value, path: &str) -> Vec<String> {
        let Some(items) = v.as_array() else {
            self.fail(path, "expected an array of polynomial strings");
            return Vec::new();
        };
        items
            .iter()
            .enumerate()
            .filter_map(|(k, item)| match item.as_str() {
                Some(s) => Some(s.to_string()),
                None => {
                    self.fail(format!("{path}[{k}]"), format!("expected a string, found {item}"));
                    None
                }
            })
            .collect()
    }

    fn vars(&mut self, v: &Value) -> Vec<(String, u64)> {
        let Some(items) = v.as_array() else {
            self.fail("$.vars", "expected an array of [name, weight] pairs");
            return Vec::new();
        };
        if items.is_empty() {
            self.fail("$.vars", "at least one variable is required");
        }
        let mut out = Vec::new();
        for (k, item) in items.iter().enumerate() {
            let path = format!("$.vars[{k}]");
            match item.as_array().map(Vec::as_slice) {
                Some([name, weight]) => {
                    let name = match name.as_str() {
                        Some(s) => s.to_string(),
                        None => {
                            self.fail(format!("{path}[0]"), "expected a variable name");
                            continue;
                        }
                    };
                    if let Some(w) = self.uint(weight, &format!("{path}[1]"), 1) {
                        out.push((name, w));
                    }
                }
                _ => self.fail(path, format!("expected a [name, weight] pair, found {item}")),
            }
        }
        out
    }

    fn options(&mut self, v: &Value) -> Options {
        let mut o = Options::default();
        let Some(map) = v.as_object() else {
            self.fail("$.options", "expected an object");
            return o;
        };
        for key in map.keys() {
            if !OPTION_FIELDS.contains(&key.as_str()) {
                self.fail(format!("$.options.{key}"), "unknown field");
            }
        }
        if let Some(v) = map.get("seed") {
            o.seed = self.uint(v, "$.options.seed", 0).unwrap_or(0);
        }
        if let Some(v) = map.get("count") {
            o.count = self.uint(v, "$.options.count", 1).unwrap_or(1);
        }
        if let Some(v) = map.get("all-e-up-to") {
            o.all_e_up_to = self
                .uint(v, "$.options.all-e-up-to", 1)
                .and_then(|n| self.small(n, "$.options.all-e-up-to"));
        }
        if let Some(v) = map.get("q-cap") {
            o.q_cap = self.uint(v, "$.options.q-cap", 2).unwrap_or(DEFAULT_Q_CAP);
        }
        if let Some(v) = map.get("assume-gorenstein") {
            match v.as_bool() {
                Some(b) => o.assume_gorenstein = b,
                None => self.fail("$.options.assume-gorenstein", "expected a boolean"),
            }
        }
        if let Some(v) = map.get("profile") {
            match v.as_str() {
                Some("ci") => o.profile = Profile::Ci,
                Some("explore") => o.profile = Profile::Explore,
                _ => self.fail("$.options.profile", format!("expected \"ci\" or \"explore\", found {v}")),
            }
        }
        o
    }

    fn small(&mut self, n: u64, path: &str) -> Option<u32> {
        match u32::try_from(n) {
            Ok(v) => Some(v),
            Err(_) => {
                self.fail(path, format!("{n} is too large"));
                None
            }
        }
    }
}

/// Validates a job document.
pub fn parse_job(doc: &Value) -> Result<JobSpec, SchemaError> {
    let mut ck = Checker { errors: Vec::new() };
    let empty = Map::new();
    let root = match doc.as_object() {
        Some(m) => m,
        None => {
            ck.fail("$", "expected a JSON object");
            &empty
        }
    };
    for key in root.keys() {
        if !TOP_FIELDS.contains(&key.as_str()) {
            ck.fail(format!("$.{key}"), "unknown field");
        }
    }
    let mode = match root.get("mode") {
        None => {
            ck.fail("$.mode", "missing required field");
            None
        }
        Some(v) => match v.as_str().and_then(Mode::from_name) {
            Some(m) => Some(m),
            None => {
                let names: Vec<&str> = Mode::ALL.iter().map(|m| m.name()).collect();
                ck.fail("$.mode", format!("expected one of {}, found {v}", names.join("|")));
                None
            }
        },
    };
    let ring_needed = mode.is_none_or(Mode::needs_ring);
    let setup_needed = mode.is_some_and(Mode::needs_setup);

    let require = |ck: &mut Checker, name: &str, needed: bool| -> Option<Value> {
        match root.get(name) {
            Some(v) => Some(v.clone()),
            None => {
                if needed {
                    ck.fail(format!("$.{name}"), "missing required field");
                }
                None
            }
        }
    };

    let p = require(&mut ck, "p", ring_needed).and_then(|v| {
        let p = ck.uint(&v, "$.p", 2)?;
        if !is_prime(p) {
            ck.fail("$.p", format!("{p} is not prime"));
            return None;
        }
        Some(p)
    });
    let vars = require(&mut ck, "vars", ring_needed)
        .map(|v| ck.vars(&v))
        .unwrap_or_default();
    let c = require(&mut ck, "C", setup_needed)
        .map(|v| ck.strings(&v, "$.C"))
        .unwrap_or_default();
    let i = require(&mut ck, "I", ring_needed)
        .map(|v| ck.strings(&v, "$.I"))
        .unwrap_or_default();
    let e = require(&mut ck, "e", setup_needed).and_then(|v| {
        let n = ck.uint(&v, "$.e", 1)?;
        ck.small(n, "$.e")
    });
    let options = root
        .get("options")
        .map(|v| ck.options(v))
        .unwrap_or_default();
    if let (Some(e), Some(top)) = (e, options.all_e_up_to) {
        if top < e {
            ck.fail("$.options.all-e-up-to", format!("{top} is below e = {e}"));
        }
    }
    if !ck.errors.is_empty() {
        return Err(SchemaError(ck.errors));
    }
    Ok(JobSpec {
        p,
        vars,
        c,
        i,
        e,
        mode: mode.expect("mode validated"),
        options,
    })
}

/// Flag values as given on the command line, before validation.
#[derive(Clone, Debug, Default)]
pub struct FlagJob {
    pub mode: Option<String>,
    pub p: Option<u64>,
    pub vars: Option<String>,
    pub c: Vec<String>,
    pub i: Vec<String>,
    pub e: Option<u64>,
    pub seed: Option<u64>,
    pub count: Option<u64>,
    pub all_e_up_to: Option<u64>,
    pub q_cap: Option<u64>,
    pub assume_gorenstein: bool,
    pub profile: Option<String>,
}

/// Builds the job document the flags describe, layered over `base` (the
/// contents of `--job`, if any). `--vars` is `name:weight,...`; `--C` and
/// `--I` are repeatable and split on commas.
pub fn document_from_flags(flags: &FlagJob, base: Option<Value>) -> Result<Value, SchemaError> {
    let mut root = match base {
        None => Map::new(),
        Some(Value::Object(m)) => m,
        Some(_) => {
            return Err(SchemaError(vec![FieldError {
                path: "$".into(),
                message: "expected a JSON object".into(),
            }]))
        }
    };
    if let Some(m) = &flags.mode {
        root.insert("mode".into(), Value::from(m.as_str()));
    }
    if let Some(p) = flags.p {
        root.insert("p".into(), Value::from(p));
    }
    if let Some(vars) = &flags.vars {
        let mut list = Vec::new();
        for (k, part) in vars.split(',').map(str::trim).filter(|s| !s.is_empty()).enumerate() {
            let (name, weight) = part.split_once(':').unwrap_or((part, "1"));
            let weight: u64 = weight.trim().parse().map_err(|_| {
                SchemaError(vec![FieldError {
                    path: format!("$.vars[{k}][1]"),
                    message: format!("expected a positive integer weight, found {weight:?}"),
                }])
            })?;
            list.push(Value::from(vec![Value::from(name.trim()), Value::from(weight)]));
        }
        root.insert("vars".into(), Value::from(list));
    }
    let split = |items: &[String]| -> Value {
        items
            .iter()
            .flat_map(|s| s.split(','))
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(Value::from)
            .collect()
    };
    if !flags.c.is_empty() {
        root.insert("C".into(), split(&flags.c));
    }
    if !flags.i.is_empty() {
        root.insert("I".into(), split(&flags.i));
    }
    if let Some(e) = flags.e {
        root.insert("e".into(), Value::from(e));
    }
    let mut opts: BTreeMap<&str, Value> = BTreeMap::new();
    if let Some(v) = flags.seed {
        opts.insert("seed", v.into());
    }
    if let Some(v) = flags.count {
        opts.insert("count", v.into());
    }
    if let Some(v) = flags.all_e_up_to {
        opts.insert("all-e-up-to", v.into());
    }
    if let Some(v) = flags.q_cap {
        opts.insert("q-cap", v.into());
    }
    if flags.assume_gorenstein {
        opts.insert("assume-gorenstein", true.into());
    }
    if let Some(v) = &flags.profile {
        opts.insert("profile", v.as_str().into());
    }
    if !opts.is_empty() {
        let entry = root.entry("options").or_insert_with(|| Value::Object(Map::new()));
        if let Value::Object(m) = entry {
            for (k, v) in opts {
                m.insert(k.to_string(), v);
            }
        }
    }
    Ok(Value::Object(root))
}
