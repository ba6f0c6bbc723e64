//! Runs every acceptance criterion at its full size and prints one line per criterion.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use gicarkit::verify::{run_suite, VerifyConfig};

struct Criterion {
    number: usize,
    title: &'static str,
    suite: &'static str,
    limit: Option<Duration>,
}

const CRITERIA: [Criterion; 9] = [
    Criterion { number: 1, title: "counting", suite: "counting", limit: Some(Duration::from_secs(10)) },
    Criterion { number: 2, title: "standard form", suite: "standard-form", limit: Some(Duration::from_secs(30)) },
    Criterion { number: 3, title: "GICAR structure", suite: "gicar", limit: None },
    Criterion { number: 4, title: "θ/Θ intertwining", suite: "theta", limit: None },
    Criterion { number: 5, title: "representation theory of G_n", suite: "gicar-reps", limit: None },
    Criterion { number: 6, title: "annular algebra", suite: "annular-algebra", limit: None },
    Criterion { number: 7, title: "irreducible modules", suite: "irr-modules", limit: None },
    Criterion { number: 8, title: "toy tensor representation", suite: "toy", limit: Some(Duration::from_secs(60)) },
    Criterion { number: 9, title: "cross-module consistency", suite: "consistency", limit: None },
];

fn main() -> ExitCode {
    let cfg = VerifyConfig::default();
    let mut failed = 0;
    for c in &CRITERIA {
        let start = Instant::now();
        let result = run_suite(c.suite, &cfg);
        let elapsed = start.elapsed();
        let (ok, detail) = match &result {
            Err(e) => (false, format!("error: {e}")),
            Ok(rep) => {
                let mut detail = format!("{}/{} checks", rep.passed, rep.passed + rep.failed);
                for check in rep.checks.iter().filter(|c| !c.pass) {
                    detail.push_str(&format!("\n    FAILED {}: expected {}, got {}", check.id, check.expected, check.got));
                }
                (rep.ok(), detail)
            }
        };
        let in_time = c.limit.is_none_or(|l| elapsed <= l);
        let limit = c.limit.map_or(String::new(), |l| format!(", limit {}s", l.as_secs()));
        let pass = ok && in_time;
        println!(
            "criterion {} ({}): {} [{detail}; {:.2}s{limit}]",
            c.number,
            c.title,
            if pass { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64()
        );
        if !pass {
            failed += 1;
        }
    }
    println!("acceptance: {} of {} criteria passed", CRITERIA.len() - failed, CRITERIA.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
