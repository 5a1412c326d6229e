import ast


def _setup_keywords():
    with open("setup.py", "r") as f:
        tree = ast.parse(f.read())
    for node in ast.walk(tree):
        if isinstance(node, ast.Call) and getattr(node.func, "id", None) == "setup":
            return {
                kw.arg: ast.literal_eval(kw.value)
                for kw in node.keywords
                if kw.arg in ("install_requires", "extras_require")
            }
    return {}


def test_requirements():
    """
    Make sure that the test tools are an extra and not runtime requirements.
    """

    keywords = _setup_keywords()
    assert set(keywords["install_requires"]) == {"loguru", "numpy", "pyyaml", "sympy"}
    assert set(keywords["extras_require"]["test"]) == {"hypothesis", "pytest"}
