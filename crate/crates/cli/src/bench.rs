//! `bkron bench`: time the four methods across a range of m, as CSV.

use std::time::Instant;

use crate::compute::method_from_name;
use crate::flags::Flags;
use crate::output::{records_json, OutputRecord, Sink};
use crate::CliError;

pub const HELP: &str = "\
Usage: bkron bench --m-list M1,M2,... [flags]

Emits one CSV row per (method, m, repetition):

    method,m,a,n,nanos,value

The value column is method-independent for a given m; the a and n cells
are filled only for the parameterized methods.

Flags:
  --m-list LIST    comma-separated m values (required)
  --methods LIST   comma-separated subset of recurrence,kronecker,
                   generalized,generalized-simple (default: all four)
  --reps R         timing samples per cell (default 3)
  --a-mode MODE    zero | mid | max: a = 0, m/2 or m (default zero)
  --n-scale S      n = S*m for the parameterized methods (default 1)
  --json           emit records as a JSON array instead of CSV
  --out FILE       duplicate stdout to FILE
";

const ALL_METHODS: [&str; 4] = [
    "recurrence",
    "kronecker",
    "generalized",
    "generalized-simple",
];

pub fn run(args: &[String]) -> Result<(), CliError> {
    let flags = Flags::parse(
        args,
        &["m-list", "methods", "reps", "a-mode", "n-scale", "out"],
        &["json", "help"],
    )?;
    if flags.has("help") {
        crate::output::write_stdout(format_args!("{HELP}"));
        return Ok(());
    }

    let m_list: Vec<u64> = flags
        .required("m-list")?
        .split(',')
        .map(|part| {
            part.trim()
                .parse::<u64>()
                .map_err(|_| CliError::Usage(format!("bad m value {part:?} in --m-list")))
        })
        .collect::<Result<_, _>>()?;
    if m_list.is_empty() {
        return Err(CliError::Usage("--m-list must be nonempty".into()));
    }

    let method_names: Vec<String> = match flags.get("methods") {
        None => ALL_METHODS.iter().map(|s| s.to_string()).collect(),
        Some(list) => list.split(',').map(|s| s.trim().to_string()).collect(),
    };
    if method_names.is_empty() {
        return Err(CliError::Usage("--methods must be nonempty".into()));
    }

    let reps = flags.opt_u64("reps")?.unwrap_or(3).max(1);
    let a_mode = flags.get("a-mode").unwrap_or("zero");
    let n_scale = flags.opt_u64("n-scale")?.unwrap_or(1).max(1);

    let mut records = Vec::new();
    for &m in &m_list {
        let a = match a_mode {
            "zero" => 0,
            "mid" => m / 2,
            "max" => m,
            other => {
                return Err(CliError::Usage(format!(
                    "unknown --a-mode {other:?} (expected zero, mid or max)"
                )))
            }
        };
        let n = m * n_scale;
        for name in &method_names {
            let method = method_from_name(name, a, n)?;
            for _ in 0..reps {
                let started = Instant::now();
                let value = method
                    .compute(m)
                    .map_err(|e| CliError::Usage(format!("{name} at m = {m}: {e}")))?;
                let elapsed_ns = started.elapsed().as_nanos();
                records.push(OutputRecord {
                    method,
                    m,
                    value,
                    elapsed_ns,
                });
            }
        }
    }

    // determinism check: the value column may not depend on the method
    for &m in &m_list {
        let group: Vec<&OutputRecord> = records.iter().filter(|r| r.m == m).collect();
        if group.windows(2).any(|w| w[0].value != w[1].value) {
            return Err(CliError::IdentityFailure(format!(
                "methods disagree at m = {m}"
            )));
        }
    }

    let mut sink = Sink::new(flags.get("out"))?;
    if flags.has("json") {
        sink.line(&records_json(&records))?;
    } else {
        sink.line("method,m,a,n,nanos,value")?;
        for record in &records {
            sink.line(&record.csv_row())?;
        }
    }
    sink.finish()
}
