use std::io;

use orbit_atlas_cli::config::BUDGET_ENV;

fn main() {
    let env_budget = std::env::var(BUDGET_ENV).ok();
    let code = orbit_atlas_cli::run(
        std::env::args_os(),
        env_budget.as_deref(),
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
    );
    std::process::exit(code);
}
