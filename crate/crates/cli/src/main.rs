use clap::Parser;

fn main() {
    let cli = dingtri_cli::Cli::parse();
    let code = dingtri_cli::run(&cli, &mut std::io::stdout().lock(), &mut std::io::stderr().lock());
    std::process::exit(code);
}
