"""Vocabularies and structural profiles for the synthetic product corpus.

Every category owns a planted vocabulary whose tokens appear in no other
category and not in the shared vocabulary. Records draw each text slot from the
planted vocabulary with probability ``vocab_strength`` and from the shared
(confusable) vocabulary otherwise. Within a category, component and tag tokens
are disjoint and neither contains the stem, so only the profile's linkage
decides which attribute nodes the co-occurrence rule connects.

Node features only reach the SGCNN through pairwise similarities, so categories
are told apart by the shape of their subgraphs: the number of attribute nodes
and how the planted parts are linked among themselves.
"""

CATEGORY_VOCABULARIES = {
    "Car": {
        "stem": "car",
        "adjectives": ["sporty", "electric", "vintage", "racing", "luxury"],
        "nouns": ["sedan", "coupe", "roadster", "hatchback", "supercar"],
        "description": [
            "driving",
            "speed",
            "aerodynamic",
            "bodywork",
            "automotive",
            "passenger",
            "highway",
            "garage",
        ],
        "components": [
            "bumper",
            "door",
            "hood",
            "trunk",
            "dashboard",
            "windshield",
            "grille",
            "fender",
            "headlight",
            "taillight",
            "seat",
            "mirror",
            "chassis",
            "spoiler",
            "exhaust",
            "radiator",
        ],
        "tags": [
            "vehicle",
            "sedan",
            "supercar",
            "racecar",
            "bodykit",
            "coupe",
            "roadster",
            "motorsport",
        ],
    },
    "Engine": {
        "stem": "engine",
        "adjectives": ["turbocharged", "diesel", "twin", "supercharged", "inline"],
        "nouns": ["engine", "motor", "powerplant", "block"],
        "description": [
            "combustion",
            "horsepower",
            "torque",
            "displacement",
            "ignition",
            "fuel",
            "stroke",
            "compression",
        ],
        "components": [
            "piston",
            "crankshaft",
            "camshaft",
            "cylinder",
            "valve",
            "sparkplug",
            "flywheel",
            "manifold",
            "injector",
            "gasket",
            "turbo",
            "timing",
            "oilpan",
            "rocker",
            "conrod",
            "throttle",
        ],
        "tags": [
            "powertrain",
            "motor",
            "v8",
            "combustion",
            "v6",
            "diesel",
            "horsepower",
            "pistons",
        ],
    },
    "Robotic Arm": {
        "stem": "robot",
        "adjectives": ["robotic", "articulated", "industrial", "collaborative"],
        "nouns": ["manipulator", "robot", "arm", "cobot"],
        "description": [
            "kinematics",
            "payload",
            "actuator",
            "degrees",
            "freedom",
            "automation",
            "pick",
            "place",
        ],
        "components": [
            "joint",
            "wrist",
            "elbow",
            "shoulder",
            "gripper",
            "servo",
            "link",
            "effector",
            "turntable",
            "linkage",
            "claw",
            "forearm",
            "controller",
            "encoder",
            "harmonic",
            "actuator",
        ],
        "tags": [
            "robotics",
            "mechatronics",
            "automation",
            "manipulator",
            "cobot",
            "pickandplace",
            "kinematics",
            "arduino",
        ],
    },
    "Airplane": {
        "stem": "aircraft",
        "adjectives": ["jet", "commercial", "propeller", "supersonic", "cargo"],
        "nouns": ["airplane", "aircraft", "airliner", "jetliner", "plane"],
        "description": [
            "flight",
            "aviation",
            "lift",
            "cruise",
            "altitude",
            "airframe",
            "runway",
            "pilot",
        ],
        "components": [
            "fuselage",
            "wing",
            "aileron",
            "rudder",
            "elevator",
            "cockpit",
            "nacelle",
            "flap",
            "slat",
            "stabilizer",
            "tailcone",
            "winglet",
            "canopy",
            "pylon",
            "spar",
            "propeller",
        ],
        "tags": [
            "aviation",
            "airplane",
            "aeronautics",
            "jet",
            "boeing",
            "airbus",
            "flight",
            "aerospace",
        ],
    },
    "Gear": {
        "stem": "gear",
        "adjectives": ["spur", "helical", "bevel", "planetary", "worm"],
        "nouns": ["gear", "gearbox", "gearset", "pinion", "sprocket"],
        "description": [
            "teeth",
            "mesh",
            "ratio",
            "module",
            "pitch",
            "involute",
            "transmission",
            "reduction",
        ],
        "components": [
            "tooth",
            "pinion",
            "rack",
            "ring",
            "sun",
            "planet",
            "carrier",
            "keyway",
            "bore",
            "spline",
            "crown",
            "flank",
            "addendum",
            "dedendum",
            "backlash",
            "sprocket",
        ],
        "tags": [
            "drivetrain",
            "gears",
            "gearbox",
            "mechanical",
            "transmission",
            "involute",
            "spur",
            "cogs",
        ],
    },
    "Wheel": {
        "stem": "wheel",
        "adjectives": ["alloy", "forged", "offroad", "chrome", "spoked"],
        "nouns": ["wheel", "rim", "tire", "tyre", "wheelset"],
        "description": [
            "tread",
            "diameter",
            "traction",
            "rolling",
            "inch",
            "sidewall",
            "balance",
            "grip",
        ],
        "components": [
            "rim",
            "spoke",
            "hub",
            "tire",
            "lug",
            "bead",
            "tread",
            "sidewall",
            "barrel",
            "flange",
            "centercap",
            "nipple",
            "axle",
            "hubcap",
            "beadlock",
            "tube",
        ],
        "tags": [
            "motorbike",
            "wheels",
            "bicycle",
            "tubeless",
            "alloy",
            "offroad",
            "tyre",
            "rims",
        ],
    },
}

# How the planted parts of one record share tokens:
#   none    no shared tokens, so the subgraph is a star around the product
#   pair    the first two planted parts carry the stem ("robot joint", "robot wrist")
#   chain   the first three planted parts overlap one word at a time
#           ("piston valve", "valve rocker", "rocker")
#   clique  every planted part carries the stem
PART_LINKAGES = ("none", "pair", "chain", "clique")

# Part and tag counts are inclusive ranges; drawn entries are always distinct.
CATEGORY_PROFILES = {
    "Gear": {"parts": (1, 1), "tags": (1, 1), "linkage": "none"},
    "Robotic Arm": {"parts": (5, 7), "tags": (1, 3), "linkage": "pair"},
    "Wheel": {"parts": (1, 1), "tags": (0, 0), "linkage": "none"},
    "Engine": {"parts": (6, 8), "tags": (1, 3), "linkage": "chain"},
    "Car": {"parts": (6, 8), "tags": (1, 3), "linkage": "none"},
    "Airplane": {"parts": (7, 9), "tags": (1, 3), "linkage": "clique"},
}

SHARED_VOCABULARY = {
    "adjectives": [
        "custom",
        "simple",
        "detailed",
        "parametric",
        "lowpoly",
        "printable",
        "modern",
        "classic",
    ],
    "nouns": ["model", "design", "concept", "prototype", "project", "assembly"],
    "description": [
        "this",
        "model",
        "designed",
        "with",
        "for",
        "printing",
        "render",
        "files",
        "include",
        "made",
        "using",
        "solidworks",
        "fusion",
        "blender",
        "free",
        "download",
        "enjoy",
        "version",
        "update",
        "scale",
    ],
    "components": [
        "bolt",
        "screw",
        "bracket",
        "washer",
        "spring",
        "bearing",
        "nut",
        "pin",
        "plate",
        "housing",
        "cover",
        "clip",
        "seal",
        "rivet",
        "spacer",
        "shaft",
    ],
    "tags": [
        "design",
        "cad",
        "3dprint",
        "solidworks",
        "model",
        "engineering",
        "render",
        "stl",
        "prototype",
        "concept",
    ],
}

SYNTHETIC_COMMENTS = [
    "great work",
    "nice model",
    "thanks for sharing",
    "awesome design",
    "very detailed",
    "can you share the step file",
    "love it",
    "well done",
]

SYNTHETIC_AUTHORS = [
    "a.kovacs",
    "b.okafor",
    "c.lindqvist",
    "d.moreau",
    "e.tanaka",
    "f.haddad",
    "g.novak",
    "h.silva",
    "i.petrov",
    "j.mensah",
    "k.oconnor",
    "l.zhang",
]
