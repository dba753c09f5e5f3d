//! `bkron expand`: print a truncated series expansion, one term per line.

use bkron::muhat::{log_power_image, mu_log_closed_form, z_power_image};
use bkron::series::{expand_f, expand_g1, expand_g_closed, phi};

use crate::flags::Flags;
use crate::output::Sink;
use crate::CliError;

pub const HELP: &str = "\
Usage: bkron expand --object OBJ --trunc P [flags]

Prints the expansion of OBJ modulo total degree P, one nonzero term per
line in the format \"a b num/den\" (X-degree, Y-degree, coefficient).

Objects:
  f             integral of (e^t - 1)^{n+1} from X to Y     (needs --n)
  g             f / (e^{Y-X} - 1)                           (needs --n)
  g1            f / (Y - X)                                 (needs --n)
  phi           Bernoulli series sum B_i/i! (Y-X)^i
  muhat-zk      image of z^k under the exponential-pair map (needs --k)
  muhat-Zk      image of (log z)^k, k >= 1                  (needs --k)
  theorem4-rhs  closed-form expansion of the image of log z

Flags:
  --object OBJ   which series to expand (required)
  --trunc P      truncation: keep total degrees < P (required, P >= 1)
  --n N          parameter for f, g, g1
  --k K          power for muhat-zk / muhat-Zk
  --out FILE     duplicate stdout to FILE
";

pub fn run(args: &[String]) -> Result<(), CliError> {
    let flags = Flags::parse(args, &["object", "trunc", "n", "k", "out"], &["help"])?;
    if flags.has("help") {
        crate::output::write_stdout(format_args!("{HELP}"));
        return Ok(());
    }
    let object = flags.required("object")?;
    let trunc = flags.required_u64("trunc")? as usize;
    if trunc < 1 {
        return Err(CliError::Usage("--trunc must be at least 1".into()));
    }
    let need_n = || {
        flags
            .opt_u64("n")?
            .ok_or_else(|| CliError::Usage(format!("--object {object} needs --n")))
    };
    let need_k = || {
        flags
            .opt_i64("k")?
            .ok_or_else(|| CliError::Usage(format!("--object {object} needs --k")))
    };

    let series = match object {
        "f" => expand_f(need_n()?, trunc),
        "g" => expand_g_closed(need_n()?, trunc),
        "g1" => expand_g1(need_n()?, trunc).map_err(|e| CliError::Usage(e.to_string()))?,
        "phi" => phi(trunc),
        "muhat-zk" => z_power_image(need_k()?, trunc),
        "muhat-Zk" => {
            let k = need_k()?;
            if k < 1 {
                return Err(CliError::Usage("requires 1 <= k".into()));
            }
            // expanded at trunc+1 so the printed terms cover degrees < trunc
            log_power_image(k as u64, trunc + 1).map_err(|e| CliError::Usage(e.to_string()))?
        }
        "theorem4-rhs" => mu_log_closed_form(trunc),
        other => {
            return Err(CliError::Usage(format!("unknown object {other:?}")));
        }
    };

    let mut sink = Sink::new(flags.get("out"))?;
    for line in series.term_lines() {
        sink.line(&line)?;
    }
    sink.finish()
}
