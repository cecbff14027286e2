use std::io;

fn main() {
    env_logger::init();
    let code = whitehead::cli::run(std::env::args_os(), &mut io::stdout().lock(), &mut io::stderr().lock());
    std::process::exit(code);
}
