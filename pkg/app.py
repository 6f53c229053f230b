from flask import Flask, jsonify, request

from ncx.services.facade import NComplexToolkit
from ncx.services.settings import Settings


class BadQuery(Exception):
    pass


def _int_arg(name, default=None, required=False):
    value = request.args.get(name)
    if value is None or value == "":
        if required:
            raise BadQuery(f"query parameter {name} is required")
        return default
    try:
        return int(value)
    except ValueError:
        raise BadQuery(f"query parameter {name} must be an integer") from None


def _body():
    data = request.get_json(silent=True)
    if data is None:
        raise BadQuery("request body must be JSON")
    return data


def create_app(settings=None):
    settings = settings or Settings()
    app = Flask(__name__)
    toolkit = NComplexToolkit(settings)
    app.config["TOOLKIT"] = toolkit

    def respond(outcome):
        success, result, message = outcome
        if success:
            return jsonify({"message": message, "result": result}), 200
        status = 400 if toolkit.is_parse_error() else 422
        return jsonify({"error": message}), status

    @app.errorhandler(BadQuery)
    def bad_query(error):
        return jsonify({"error": str(error)}), 400

    @app.route("/api/health")
    def health():
        return jsonify(toolkit.get_status())

    @app.route("/api/validate", methods=["POST"])
    def validate():
        kind = request.args.get("kind", "complex")
        if kind not in ("complex", "chain_map"):
            raise BadQuery("kind must be complex or chain_map")
        return respond(toolkit.validate(_body(), kind))

    @app.route("/api/homology", methods=["POST"])
    def homology():
        return respond(toolkit.homology(_body(), _int_arg("degree"), _int_arg("amplitude")))

    @app.route("/api/cone", methods=["POST"])
    def cone():
        return respond(toolkit.cone(_body()))

    @app.route("/api/suspend", methods=["POST"])
    def suspend():
        strict = request.args.get("strict", "false").lower() in ("1", "true", "yes")
        return respond(toolkit.suspend(_body(), _int_arg("times", 1), strict))

    @app.route("/api/qis", methods=["POST"])
    def qis():
        return respond(toolkit.qis(_body()))

    @app.route("/api/mor", methods=["POST"])
    def mor():
        return respond(toolkit.mor(_body(), _int_arg("j")))

    @app.route("/api/nhn", methods=["POST"])
    def nhn():
        return respond(toolkit.nhn(_body(), _int_arg("degree"), _int_arg("amplitude")))

    @app.route("/api/mu")
    def mu():
        return respond(toolkit.mu(
            _int_arg("N", required=True),
            _int_arg("r", required=True),
            _int_arg("s", required=True),
            _int_arg("dim", 1),
            request.args.get("field"),
        ))

    return app


if __name__ == "__main__":
    settings = Settings()
    settings.configure_logging()
    create_app(settings).run(host=settings.api_host, port=settings.api_port, debug=False)
