fn main() {
    std::process::exit(rmtverify::cli::main());
}
