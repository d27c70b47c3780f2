use clap::Parser;

fn main() {
    let cli = gk_cli::Cli::parse();
    let code = gk_cli::run(cli, &mut std::io::stdout().lock(), &mut std::io::stderr().lock());
    std::process::exit(code);
}
