//! `bkron verify`: sweep the identity suites and report pass/fail counts.

use std::thread;

use bkron::arith::{binomial, factorial};
use bkron::bernoulli::{
    alternating_power_sum, bernoulli_generalized, bernoulli_generalized_simple, bernoulli_number,
    generalized_residual,
};
use bkron::muhat::{
    fundamental_identity_check, inversion_first_row, laurent_corpus, laurent_image,
    linear_form_identity_check, log_image_via_inversion, log_power_image, mu_log_closed_form,
    simple_loop_power, z_power_image,
};
use bkron::rational::{frac_string, rat_int};
use bkron::series::{expand_f, expand_g_alt, expand_g_closed, g_coefficient, phi};
use bkron::{Int, QBiSeries, QLaurent, Rational};

use crate::flags::Flags;
use crate::output::Sink;
use crate::CliError;

pub const HELP: &str = "\
Usage: bkron verify --suite SUITE [flags]

Runs an identity suite and prints one report line per suite plus a final
pass/fail line. Exits 0 exactly when every check passed; a failed identity
exits 1 after printing the first failing instance.

Suites:
  generalized   closed formulas against the recurrence oracle over all
                0 <= a <= m <= n <= max-n            (default max-n 25)
  lemma         alternating binomial power sums      (default max-n 30)
  series        two-variable expansion identities    (default max-n 8)
  muhat         exponential-pair map identities on a random Laurent
                corpus, continuity, matrix first row (default trunc 10,
                cases 200)
  inversion     matrix-inversion route to the log image vs -phi
                                                     (default max-n 10)
  theorem4      closed form of the log-z image vs the quotient route
                                                     (default trunc 14)
  all           every suite above at its defaults

Flags:
  --suite SUITE  which suite to run (required)
  --max-n N      sweep bound for generalized / lemma / series / inversion
  --trunc P      truncation for muhat / theorem4
  --cases C      corpus size for muhat (default 200)
  --seed S       corpus seed for muhat (default 3405691582)
  --out FILE     duplicate stdout to FILE
";

const DEFAULT_SEED: u64 = 0xcafe_babe;

struct Suite {
    name: &'static str,
    passed: usize,
    failures: Vec<String>,
}

impl Suite {
    fn new(name: &'static str) -> Self {
        Suite {
            name,
            passed: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failures.push(describe());
        }
    }

    fn total(&self) -> usize {
        self.passed + self.failures.len()
    }
}

pub fn run(args: &[String]) -> Result<(), CliError> {
    let flags = Flags::parse(
        args,
        &["suite", "max-n", "trunc", "cases", "seed", "out"],
        &["help"],
    )?;
    if flags.has("help") {
        crate::output::write_stdout(format_args!("{HELP}"));
        return Ok(());
    }
    let suite = flags.required("suite")?;
    let max_n = flags.opt_u64("max-n")?;
    let trunc = flags.opt_usize("trunc")?;
    let cases = flags.opt_usize("cases")?.unwrap_or(200);
    let seed = flags.opt_u64("seed")?.unwrap_or(DEFAULT_SEED);

    let reports = match suite {
        "generalized" => vec![generalized_suite(max_n.unwrap_or(25))],
        "lemma" => vec![lemma_suite(max_n.unwrap_or(30))],
        "series" => vec![series_suite(max_n.unwrap_or(8))],
        "muhat" => vec![muhat_suite(trunc.unwrap_or(10), cases, seed)],
        "inversion" => vec![inversion_suite(max_n.unwrap_or(10))],
        "theorem4" => vec![theorem4_suite(trunc.unwrap_or(14))],
        "all" => vec![
            generalized_suite(25),
            lemma_suite(30),
            series_suite(8),
            muhat_suite(10, cases, seed),
            inversion_suite(10),
            theorem4_suite(14),
        ],
        other => {
            return Err(CliError::Usage(format!("unknown suite {other:?}")));
        }
    };

    let mut sink = Sink::new(flags.get("out"))?;
    let mut first_failure = None;
    for report in &reports {
        sink.line(&format!(
            "suite {}: {}/{} checks passed",
            report.name,
            report.passed,
            report.total(),
        ))?;
        if let Some(failure) = report.failures.first() {
            sink.line(&format!("  first failure: {failure}"))?;
            if first_failure.is_none() {
                first_failure = Some(format!("{}: {failure}", report.name));
            }
        }
    }
    match first_failure {
        None => {
            sink.line("pass")?;
            sink.finish()
        }
        Some(failure) => {
            sink.line("fail")?;
            sink.finish()?;
            Err(CliError::IdentityFailure(failure))
        }
    }
}

/// The closed formulas against the recurrence oracle, fanned out across
/// worker threads over contiguous chunks of the (n, m, a) sweep so the
/// aggregate stays in sorted order.
fn generalized_suite(max_n: u64) -> Suite {
    let mut suite = Suite::new("generalized");
    let mut triples = Vec::new();
    for n in 0..=max_n {
        for m in 0..=n {
            for a in 0..=m {
                triples.push((n, m, a));
            }
        }
    }
    bernoulli_number(max_n); // warm the shared oracle cache before fanning out

    let workers = thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
        .clamp(1, 8);
    let chunk_len = triples.len().div_ceil(workers);
    let chunk_reports: Vec<(usize, Vec<String>)> = thread::scope(|scope| {
        let handles: Vec<_> = triples
            .chunks(chunk_len)
            .map(|chunk| {
                scope.spawn(move || {
                    let mut passed = 0usize;
                    let mut failures = Vec::new();
                    for &(n, m, a) in chunk {
                        let oracle = bernoulli_number(m);
                        match bernoulli_generalized(m, a, n) {
                            Ok(v) if v == oracle => passed += 1,
                            Ok(v) => failures.push(format!(
                                "(m, a, n) = ({m}, {a}, {n}): generalized gave {}, oracle {}",
                                frac_string(&v),
                                frac_string(&oracle),
                            )),
                            Err(e) => failures.push(format!(
                                "(m, a, n) = ({m}, {a}, {n}): generalized failed: {e}"
                            )),
                        }
                        if m >= 2 {
                            match bernoulli_generalized_simple(m, a, n) {
                                Ok(v) if v == oracle => passed += 1,
                                Ok(v) => failures.push(format!(
                                    "(m, a, n) = ({m}, {a}, {n}): simple variant gave {}, oracle {}",
                                    frac_string(&v),
                                    frac_string(&oracle),
                                )),
                                Err(e) => failures.push(format!(
                                    "(m, a, n) = ({m}, {a}, {n}): simple variant failed: {e}"
                                )),
                            }
                        }
                    }
                    (passed, failures)
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    for (passed, failures) in chunk_reports {
        suite.passed += passed;
        suite.failures.extend(failures);
    }

    // the classical formula is the (a = 0, n = m) specialization
    for m in 2..=max_n.max(40) {
        let kron = bkron::bernoulli::bernoulli_kronecker(m).expect("m >= 2");
        let special = bernoulli_generalized_simple(m, 0, m).expect("valid parameters");
        suite.check(kron == special, || {
            format!(
                "m = {m}: classical formula gave {}, specialization {}",
                frac_string(&kron),
                frac_string(&special),
            )
        });
    }
    suite
}

fn lemma_suite(max_n: u64) -> Suite {
    let mut suite = Suite::new("lemma");
    for n in 0..=max_n {
        for m in 0..=n {
            let expected = if m == 0 { rat_int(-1) } else { rat_int(0) };
            let got = alternating_power_sum(m, n).expect("m <= n by construction");
            suite.check(got == expected, || {
                format!(
                    "(m, n) = ({m}, {n}): sum = {}, expected {}",
                    frac_string(&got),
                    frac_string(&expected),
                )
            });
        }
    }
    suite
}

fn series_suite(max_n: u64) -> Suite {
    let mut suite = Suite::new("series");
    for n in 0..=max_n {
        let trunc = (n + 3) as usize;
        let f = expand_f(n, trunc);
        let closed = expand_g_closed(n, trunc);
        let alt = expand_g_alt(n, trunc);

        suite.check(alt.as_ref().is_ok_and(|alt| alt == &closed), || {
            format!("n = {n}: the two quotient expansions disagree")
        });
        suite.check(f.vanishes_below_degree(n as usize + 1), || {
            format!("n = {n}: f has terms of total degree <= n")
        });
        suite.check(closed.vanishes_below_degree(n as usize + 1), || {
            format!("n = {n}: g has terms of total degree <= n")
        });
        suite.check(f.swap_vars() == -&f, || {
            format!("n = {n}: f is not antisymmetric")
        });

        // per-coefficient closed form, including degrees above n
        for m in 0..trunc as u64 {
            for a in 0..=m {
                let from_series = closed.coeff(a as usize, (m - a) as usize).clone();
                let formula = g_coefficient(m, a, n).expect("a <= m by construction");
                suite.check(from_series == formula, || {
                    format!(
                        "n = {n}, coefficient ({a}, {}): series {}, formula {}",
                        m - a,
                        frac_string(&from_series),
                        frac_string(&formula),
                    )
                });
            }
        }

        // the residual vanishes exactly in the theorem's parameter range
        for m in 0..=n {
            for a in 0..=m {
                let residual = generalized_residual(m, a, n).expect("a <= m by construction");
                suite.check(residual == rat_int(0), || {
                    format!(
                        "(m, a, n) = ({m}, {a}, {n}): residual {} != 0",
                        frac_string(&residual),
                    )
                });
            }
        }
    }

    // the Bernoulli series inverts the exponential difference
    for trunc in 2..=14usize {
        let lhs = &(&QBiSeries::exp_monomial(-1, 1, trunc) - &QBiSeries::one(trunc)) * &phi(trunc);
        suite.check(lhs == QBiSeries::y_minus_x(trunc), || {
            format!("trunc {trunc}: (e^(-X)e^Y - 1) phi != Y - X")
        });
    }
    suite
}

fn muhat_suite(trunc: usize, cases: usize, seed: u64) -> Suite {
    let mut suite = Suite::new("muhat");
    let trunc = trunc.max(2);

    for (index, f) in laurent_corpus(seed, cases, 5, 8).iter().enumerate() {
        suite.check(fundamental_identity_check(f, trunc), || {
            format!("case {index}: defining identity fails at trunc {trunc}")
        });
        suite.check(linear_form_identity_check(f, trunc), || {
            format!("case {index}: linear-form identity fails at trunc {trunc}")
        });
    }

    // continuity: multiples of (z-1)^p map into F_{p-1}
    let z_minus_one = QLaurent::from_terms([(1, rat_int(1)), (0, rat_int(-1))]);
    let multipliers = laurent_corpus(seed.wrapping_add(1), 10, 4, 5);
    for p in 1..=6usize {
        for (index, multiplier) in multipliers.iter().enumerate() {
            let f = &z_minus_one.pow(p as u32) * multiplier;
            let image = laurent_image(&f, p + 3);
            suite.check(image.vanishes_below_degree(p - 1), || {
                format!("p = {p}, multiplier {index}: image escapes F_{}", p - 1)
            });
        }
    }

    // first row of the inverted coefficient matrix
    for n in 0..=12u64 {
        match inversion_first_row(n) {
            Ok(row) => {
                let ok = row.iter().enumerate().all(|(idx, got)| {
                    let k = idx as u64 + 1;
                    let mut expected = Rational::new(binomial(n + 1, k as i64), Int::from(k));
                    if k.is_multiple_of(2) {
                        expected = -expected;
                    }
                    got == &expected
                });
                suite.check(ok, || format!("n = {n}: first row mismatch"));
            }
            Err(e) => suite.check(false, || format!("n = {n}: inversion failed: {e}")),
        }
    }

    // each extra log-power lands one filtration step deeper
    for k in 1..=8u64 {
        let ok =
            log_power_image(k, 12).is_ok_and(|image| image.vanishes_below_degree(k as usize - 1));
        suite.check(ok, || {
            format!("k = {k}: log-power image escapes F_{}", k - 1)
        });
    }
    suite
}

fn inversion_suite(max_n: u64) -> Suite {
    let mut suite = Suite::new("inversion");
    for n in 0..=max_n {
        for p in 1..=n as usize {
            let shallow = log_image_via_inversion(n, p).expect("trunc <= n + 1");
            suite.check(shallow == -&phi(p), || {
                format!("n = {n}: inversion route differs from -phi at trunc {p}")
            });
        }
        let p = (n + 1) as usize;
        let via_inversion = log_image_via_inversion(n, p).expect("trunc <= n + 1");
        suite.check(via_inversion == -&phi(p), || {
            format!("n = {n}: inversion route differs from -phi at trunc {p}")
        });

        for m in 0..p as u64 {
            for a in 0..=m {
                let mut expected =
                    bernoulli_number(m) / Rational::from_integer(factorial(a) * factorial(m - a));
                if a % 2 == 0 {
                    expected = -expected;
                }
                let got = via_inversion.coeff(a as usize, (m - a) as usize).clone();
                suite.check(got == expected, || {
                    format!(
                        "n = {n}, coefficient ({a}, {}): got {}, expected {}",
                        m - a,
                        frac_string(&got),
                        frac_string(&expected),
                    )
                });
            }
        }
    }
    suite
}

fn theorem4_suite(max_trunc: usize) -> Suite {
    let mut suite = Suite::new("theorem4");
    for p in 1..=max_trunc {
        let closed = mu_log_closed_form(p);
        let quotient = log_power_image(1, p + 1).expect("k = 1 is valid");
        suite.check(closed == quotient, || {
            format!("trunc {p}: closed form differs from the quotient route")
        });
    }

    // tensor model vs z-power image: for k > 0 the tensor drops the
    // constant-class pair (k, 0), so add back -e^{kX} before comparing
    let p = 8usize;
    for k in -5..=5i64 {
        let embedded = simple_loop_power(k).to_biseries(p);
        let corrected = if k > 0 {
            &embedded - &QBiSeries::exp_monomial(k, 0, p)
        } else {
            embedded
        };
        suite.check(corrected == z_power_image(k, p), || {
            format!("k = {k}: tensor model does not reconcile with the z-power image")
        });
    }
    suite
}
