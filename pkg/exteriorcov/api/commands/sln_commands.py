from exteriorcov.api.arguments import positive_int
from exteriorcov.controllers.sln_controller import SlnController


def verify_sl(args, settings):
    """
    Pairing, Koszul and degree identities for sl(n)
    """
    return SlnController(settings).verify(n=args.n, trials=args.trials, seed=args.seed,
                                          koszul=not args.skip_koszul)


def register(subparsers) -> None:
    parser = subparsers.add_parser("verify-sl", help="sl(n) pairing and Koszul identities")
    parser.add_argument("--n", type=positive_int, required=True, help="Size of the matrices")
    parser.add_argument("--trials", type=positive_int, default=20, help="Random tuples for the pairing identity")
    parser.add_argument("--seed", type=int, default=0, help="Master seed of the random tuples")
    parser.add_argument("--skip-koszul", action="store_true", help="Only check the pairing and the ledger")
    parser.set_defaults(handler=verify_sl)
