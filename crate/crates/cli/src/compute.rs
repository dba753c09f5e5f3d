//! `bkron compute`: one Bernoulli number by one method.

use std::time::Instant;

use bkron::bernoulli::Method;
use bkron::rational::{decimal_string, frac_string};

use crate::flags::Flags;
use crate::output::{records_json, OutputRecord, Sink};
use crate::CliError;

pub const HELP: &str = "\
Usage: bkron compute --m M --method METHOD [flags]

Computes B_M exactly and prints it as num/den.

Flags:
  --m M              index of the Bernoulli number (required)
  --method METHOD    recurrence | kronecker | generalized | generalized-simple
  --a A              weight split for the generalized methods (default 0)
  --n N              outer range for the generalized methods (default M)
  --decimal D        additionally print a rounded decimal with D digits
  --json             emit the record as a JSON array instead of text
  --out FILE         duplicate stdout to FILE
";

/// Builds the method selected by --method/--a/--n; shared with bench.
pub fn method_from_name(name: &str, a: u64, n: u64) -> Result<Method, CliError> {
    match name {
        "recurrence" => Ok(Method::Recurrence),
        "kronecker" => Ok(Method::Kronecker),
        "generalized" => Ok(Method::Generalized { a, n }),
        "generalized-simple" => Ok(Method::GeneralizedSimple { a, n }),
        other => Err(CliError::Usage(format!(
            "unknown method {other:?} (expected recurrence, kronecker, generalized or generalized-simple)"
        ))),
    }
}

pub fn run(args: &[String]) -> Result<(), CliError> {
    let flags = Flags::parse(
        args,
        &["m", "method", "a", "n", "decimal", "out"],
        &["json", "help"],
    )?;
    if flags.has("help") {
        crate::output::write_stdout(format_args!("{HELP}"));
        return Ok(());
    }
    let m = flags.required_u64("m")?;
    let a = flags.opt_u64("a")?.unwrap_or(0);
    let n = flags.opt_u64("n")?.unwrap_or(m);
    let method = method_from_name(flags.required("method")?, a, n)?;

    let started = Instant::now();
    let value = method
        .compute(m)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let elapsed_ns = started.elapsed().as_nanos();

    let mut sink = Sink::new(flags.get("out"))?;
    let record = OutputRecord {
        method,
        m,
        value,
        elapsed_ns,
    };
    if flags.has("json") {
        sink.line(&records_json(&[record]))?;
    } else {
        sink.line(&format!("B_{m} = {}", frac_string(&record.value)))?;
        if let Some(digits) = flags.opt_usize("decimal")? {
            sink.line(&format!(
                "B_{m} \u{2248} {} (approximate, {digits} digits)",
                decimal_string(&record.value, digits),
            ))?;
        }
    }
    sink.finish()
}
