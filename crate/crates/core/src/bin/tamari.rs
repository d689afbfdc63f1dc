use std::io;

fn main() {
    let code = tamari_cubic::cli::run(std::env::args_os(), &mut io::stdout().lock(), &mut io::stderr().lock());
    std::process::exit(code);
}
