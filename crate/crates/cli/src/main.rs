use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match knotform_cli::Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(knotform_cli::Exit::InputError as u8) } else { ExitCode::SUCCESS };
        }
    };
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let code = knotform_cli::run(cli, &mut stdout.lock(), &mut stderr.lock());
    ExitCode::from(code as u8)
}
