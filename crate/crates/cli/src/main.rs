use std::io::IsTerminal;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let styled = std::env::var_os("NO_COLOR").is_none_or(|v| v.is_empty()) && std::io::stderr().is_terminal();
    let code = isk4_cli::run_with(
        &args,
        &mut std::io::stdin().lock(),
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
        styled,
    );
    std::process::exit(code);
}
