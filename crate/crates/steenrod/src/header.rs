//! Provenance block written at the top of every output file.

use serde_json::{json, Value};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Header {
    pub command: String,
    /// Window parameters in the order given.
    pub params: Vec<(String, String)>,
    pub seed: u64,
    /// Short name of the statement being exercised.
    pub tag: String,
}

impl Header {
    pub fn new(command: &str, tag: &str, seed: u64) -> Self {
        Header { command: command.into(), params: Vec::new(), seed, tag: tag.into() }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.push((key.into(), value.to_string()));
        self
    }

    fn window(&self) -> String {
        self.params.iter().map(|(k, v)| format!("{}={}", k, v)).collect::<Vec<_>>().join(" ")
    }

    pub fn lines(&self) -> Vec<String> {
        vec![
            format!("steenrod {}", VERSION),
            format!("command: {}", self.command),
            format!("window: {}", self.window()),
            format!("seed: {}", self.seed),
            format!("tag: {}", self.tag),
        ]
    }

    /// `# `-prefixed lines for TSV and text output.
    pub fn comment_block(&self) -> String {
        self.lines().iter().map(|l| format!("# {}\n", l)).collect()
    }

    pub fn to_json(&self) -> Value {
        let params: serde_json::Map<String, Value> =
            self.params.iter().map(|(k, v)| (k.clone(), Value::String(v.clone()))).collect();
        json!({
            "tool": "steenrod",
            "version": VERSION,
            "command": self.command,
            "window": Value::Object(params),
            "seed": self.seed,
            "tag": self.tag,
        })
    }

    pub fn svg_comment(&self) -> String {
        let body: Vec<String> = self.lines().iter().map(|l| l.replace("--", "- -")).collect();
        format!("<!--\n{}\n-->\n", body.join("\n"))
    }
}
