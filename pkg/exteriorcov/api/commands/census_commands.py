from exteriorcov.api.arguments import positive_int, type_tag
from exteriorcov.controllers.census_controller import CensusController
from exteriorcov.models.gradedchar import FULL, TARGETED


def census(args, settings):
    """
    Freeness test on every small module
    """
    return CensusController(settings).census(type_tag=args.type, rank=args.rank, mode=args.mode,
                                             box_bound=args.box_bound)


def scan_a(args, settings):
    """
    Divisibility scan over the partitions of n
    """
    return CensusController(settings).scan_a(n=args.n)


def register(subparsers) -> None:
    parser = subparsers.add_parser("census", help="Census of small modules")
    parser.add_argument("--type", type=type_tag, required=True, help="Cartan type letter A-G")
    parser.add_argument("--rank", type=positive_int, required=True, help="Rank of the root system")
    mode = parser.add_mutually_exclusive_group()
    mode.add_argument("--full", dest="mode", action="store_const", const=FULL, help="Expand the whole character")
    mode.add_argument("--targeted", dest="mode", action="store_const", const=TARGETED,
                      help="Expand the positive half only")
    parser.add_argument("--box-bound", type=positive_int, default=None, help="Initial coordinate bound")
    parser.set_defaults(handler=census, mode=None)

    parser = subparsers.add_parser("scan-a", help="Type A partition divisibility scan")
    parser.add_argument("--n", type=positive_int, required=True, help="Size of the partitions")
    parser.set_defaults(handler=scan_a)
