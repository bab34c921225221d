use std::fmt::Write as _;

use serde_json::{Map, Value};

/// What a run found; decides the exit code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Found,
    Valid,
    Done,
    NotFound,
    BudgetExhausted,
    Invalid,
}

impl Outcome {
    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::Found => "found",
            Outcome::Valid => "valid",
            Outcome::Done => "done",
            Outcome::NotFound => "not-found",
            Outcome::BudgetExhausted => "budget-exhausted",
            Outcome::Invalid => "invalid",
        }
    }

    pub fn exit_code(self) -> u8 {
        match self {
            Outcome::Found | Outcome::Valid | Outcome::Done => 0,
            Outcome::NotFound => 1,
            Outcome::BudgetExhausted => 2,
            Outcome::Invalid => 3,
        }
    }
}

/// Ordered key-value report of one invocation. Timings are kept out of it
/// so that repeated runs print identical reports.
#[derive(Debug)]
pub struct Report {
    fields: Vec<(String, Value)>,
    pub outcome: Outcome,
}

impl Report {
    pub fn new(command: &str, seed: u64) -> Self {
        Report {
            fields: vec![("command".into(), command.into()), ("seed".into(), seed.into())],
            outcome: Outcome::Done,
        }
    }

    pub fn set(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        let value = value.into();
        match self.fields.iter_mut().find(|(k, _)| k == key) {
            Some(slot) => slot.1 = value,
            None => self.fields.push((key.to_string(), value)),
        }
        self
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            let mut map = Map::new();
            for (k, v) in &self.fields {
                map.insert(k.clone(), v.clone());
            }
            map.insert("outcome".into(), self.outcome.as_str().into());
            let mut s = serde_json::to_string_pretty(&Value::Object(map)).expect("reports serialize");
            s.push('\n');
            s
        } else {
            let mut s = String::new();
            for (k, v) in &self.fields {
                let shown = match v {
                    Value::String(x) => x.clone(),
                    other => other.to_string(),
                };
                writeln!(s, "{k}={shown}").unwrap();
            }
            writeln!(s, "outcome={}", self.outcome.as_str()).unwrap();
            s
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_and_json() {
        let mut r = Report::new("detect even", 3);
        r.set("edges", 4).set("edges", 5);
        r.outcome = Outcome::Found;
        assert_eq!(r.render(false), "command=detect even\nseed=3\nedges=5\noutcome=found\n");
        let v: Value = serde_json::from_str(&r.render(true)).unwrap();
        assert_eq!(v["edges"], 5);
        assert_eq!(v["outcome"], "found");
    }
}
