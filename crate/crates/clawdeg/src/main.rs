fn main() {
    let code = clawdeg::run(
        std::env::args_os(),
        &clawdeg::Oracles::default(),
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    );
    std::process::exit(code);
}
