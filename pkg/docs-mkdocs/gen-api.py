import os

apiL = [
    "CheckReports",
    "ComparisonPrinciple",
    "DegenerateExpansion",
    "FrequencyFunction",
    "HopfLemma",
    "InvariantFunction",
    "MovingPlanes",
    "NumericUtils",
    "RevolutionProfile",
    "ScalarField",
    "SurfaceCatalog",
    "SurfaceConditions",
    "SurfaceCurvature",
    "TauField",
]

ioL = ["AlexlabExceptions", "AlexlabExec", "BinaryReportReader", "BinaryReportWriter", "IoAdapterBase", "ScenarioIo", "ScenarioRunner"]

for nm in apiL:
    with open(os.path.join(".", "api_reference", nm + ".md"), "w") as ofh:
        ofh.write("::: alexlab.api.%s\n" % nm)
for nm in ioL:
    with open(os.path.join(".", "api_reference", nm + ".md"), "w") as ofh:
        ofh.write("::: alexlab.io.%s\n" % nm)
