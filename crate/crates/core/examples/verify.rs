//! Runs every verification suite at a small size.

use schroeder::verify::{run_suite, Suite, DEFAULT_SEED};

fn main() {
    for suite in Suite::ALL {
        let max = suite.default_max().min(6);
        let report = run_suite(suite, Some(max), DEFAULT_SEED, None).unwrap();
        print!("{}", report.render_ascii());
    }
}
