"""
🚀 monocode - Main Application
HTTP surface of the weight enumerator
"""

from flask import Flask, jsonify

from apis.enumeration_api import codes_bp
from apis.health_api import health_bp
from cli import cli
from config.settings import get_config
from utils.logging_helpers import get_logger, setup_logging
from utils.response_helpers import domain_error_response, error_response, success_response
from utils.validation_helpers import ValidationError

logger = get_logger(__name__)


def create_app(config_name: str = None) -> Flask:
    app = Flask(__name__)
    config = get_config(config_name)
    app.config.from_object(config)

    # 1. Configure logging
    setup_logging(config)

    # 2. Register blueprints and error handlers
    register_blueprints(app)
    register_error_handlers(app)

    # 3. Expose the command-line tools as `flask codes ...`
    app.cli.add_command(cli, name='codes')

    logger.info('app_created', config=config.__name__)
    return app


def register_blueprints(app: Flask) -> None:
    """Register all API blueprints"""

    blueprints = [
        (codes_bp, 'Codes APIs'),
        (health_bp, 'Health Check API'),
    ]

    for blueprint, description in blueprints:
        app.register_blueprint(blueprint)
        logger.debug('blueprint_registered', name=description)

    @app.route('/')
    def index():
        """API root endpoint"""
        return jsonify(success_response({
            'service': 'monocode weight enumerator API',
            'version': '1.0.0',
            'endpoints': {
                'enumerate': '/api/codes/enumerate',
                'orbit': '/api/codes/orbit',
                'bound': '/api/codes/bound',
                'health_check': '/api/health',
            }
        }))


def register_error_handlers(app: Flask) -> None:
    """Register error handlers"""

    @app.errorhandler(ValidationError)
    def domain_error(error):
        body, status = domain_error_response(error)
        logger.info('request_rejected', code=error.code, status=status)
        return jsonify(body), status

    @app.errorhandler(400)
    def bad_request(error):
        return jsonify(error_response('BAD_REQUEST', 'طلب غير صحيح - تحقق من البيانات المرسلة')), 400

    @app.errorhandler(404)
    def not_found(error):
        return jsonify(error_response('NOT_FOUND', 'المورد المطلوب غير موجود')), 404

    @app.errorhandler(405)
    def method_not_allowed(error):
        return jsonify(error_response('METHOD_NOT_ALLOWED', 'الطريقة غير مسموحة لهذا المسار')), 405

    @app.errorhandler(413)
    def payload_too_large(error):
        return jsonify(error_response('PAYLOAD_TOO_LARGE', 'حجم البيانات كبير جداً')), 413

    @app.errorhandler(500)
    def internal_server_error(error):
        logger.error('server_error', error=str(error))
        return jsonify(error_response('INTERNAL_SERVER_ERROR', 'خطأ في الخادم - يرجى المحاولة لاحقاً')), 500


if __name__ == '__main__':
    create_app().run()
