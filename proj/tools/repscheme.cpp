// CLI entry point; subcommands are wired up in stages.
int main() { return 0; }
